#ifndef WQAP_MATRIX_HPP
#define WQAP_MATRIX_HPP

#include <cstdint>
#include <vector>

namespace wqap {

/// Dense square integer matrix, row-major.
struct IntMatrix {
    int n = 0;
    std::vector<std::int64_t> cells;

    IntMatrix() = default;
    explicit IntMatrix(int dim) : n(dim), cells(static_cast<std::size_t>(dim) * dim, 0) {}

    std::int64_t& at(int i, int j) { return cells[static_cast<std::size_t>(i) * n + j]; }
    std::int64_t at(int i, int j) const { return cells[static_cast<std::size_t>(i) * n + j]; }
};

/// a_ij = alpha_i * alpha_j
IntMatrix outer_product(const std::vector<std::int64_t>& alphas);

/// b_ij = |beta_i - beta_j|
IntMatrix distance_matrix(const std::vector<std::int64_t>& betas);

}  // namespace wqap

#endif
