#include "wqap/matrix.hpp"

#include <cstdlib>

namespace wqap {

IntMatrix outer_product(const std::vector<std::int64_t>& alphas) {
    int n = static_cast<int>(alphas.size());
    IntMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = alphas[i] * alphas[j];
    return a;
}

IntMatrix distance_matrix(const std::vector<std::int64_t>& betas) {
    int n = static_cast<int>(betas.size());
    IntMatrix b(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.at(i, j) = std::abs(betas[i] - betas[j]);
    return b;
}

}  // namespace wqap
