#ifndef WQAP_RECOGNIZE_HPP
#define WQAP_RECOGNIZE_HPP

#include <cstdint>
#include <vector>

#include "wqap/matrix.hpp"

namespace wqap {

/**
 * Recovers non-negative alpha with a_ij = alpha_i * alpha_j, or throws
 * NotProductMatrix naming the first violated cell. The all-zero matrix maps
 * to the all-zero vector; a nonzero row with a zero diagonal entry is
 * rejected outright (a_ii = alpha_i^2 would force the whole row to zero).
 */
std::vector<std::int64_t> factor_product_matrix(const IntMatrix& a);

/**
 * Recovers points beta with b_ij = |beta_i - beta_j|, anchored at
 * beta_1 = 0 and required to be non-decreasing; throws Not1DDistanceMatrix
 * if no such point set reproduces the matrix.
 */
std::vector<std::int64_t> recover_point_set(const IntMatrix& b);

}  // namespace wqap

#endif
