#ifndef WQAP_TESTS_HELPERS_HPP
#define WQAP_TESTS_HELPERS_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "wqap/instance.hpp"
#include "wqap/permutation.hpp"

namespace wqap::testutil {

inline WienerQapInstance random_instance(std::mt19937_64& rng, int n_max,
                                         std::int64_t alpha_max,
                                         std::int64_t beta_max) {
    int n = 1 + static_cast<int>(rng() % std::uint64_t(n_max));
    std::vector<std::int64_t> alphas(n), betas(n);
    for (auto& a : alphas)
        a = static_cast<std::int64_t>(rng() % std::uint64_t(alpha_max + 1));
    for (auto& b : betas)
        b = static_cast<std::int64_t>(rng() % std::uint64_t(beta_max + 1));
    return WienerQapInstance(std::move(alphas), std::move(betas));
}

inline Permutation random_permutation(std::mt19937_64& rng, int n) {
    Permutation perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace wqap::testutil

#endif
