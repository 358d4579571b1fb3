#include "wqap/gen.hpp"

#include <random>

#include "wqap/errors.hpp"

namespace wqap {

WienerQapInstance generate_qap(int n, std::int64_t alpha_max,
                               std::int64_t beta_max, std::uint64_t seed) {
    if (n < 1 || alpha_max < 0 || beta_max < 0)
        throw Error(ErrorCode::BadParams,
                    "need n >= 1 and non-negative value ranges");
    std::mt19937_64 rng(seed);
    std::vector<std::int64_t> alphas(n), betas(n);
    for (auto& a : alphas)
        a = static_cast<std::int64_t>(rng() % std::uint64_t(alpha_max + 1));
    for (auto& b : betas)
        b = static_cast<std::int64_t>(rng() % std::uint64_t(beta_max + 1));
    return WienerQapInstance(std::move(alphas), std::move(betas));
}

std::vector<std::int64_t> generate_degree_sequence(int r, std::uint64_t seed) {
    if (r < 2)
        throw Error(ErrorCode::BadParams, "need at least two vertices");
    std::mt19937_64 rng(seed);
    std::vector<std::int64_t> degrees(r, 1);
    for (int i = 0; i < r - 2; ++i) ++degrees[rng() % std::uint64_t(r)];
    return degrees;
}

}  // namespace wqap
