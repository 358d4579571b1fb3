#ifndef WQAP_OBJECTIVE_HPP
#define WQAP_OBJECTIVE_HPP

#include "wqap/arith.hpp"
#include "wqap/instance.hpp"
#include "wqap/matrix.hpp"
#include "wqap/permutation.hpp"

namespace wqap {

/// Ordered-pair objective: sum over all (i,j) of
/// alpha[perm(i)] * alpha[perm(j)] * |beta_i - beta_j|. Exact.
Wide evaluate_objective(const WienerQapInstance& inst, const Permutation& perm);

inline Wide evaluate_objective(const WienerQapInstance& inst, const Assignment& a) {
    return evaluate_objective(inst, a.perm);
}

/// Koopmans-Beckmann form: sum over all (i,j) of A[perm(i)][perm(j)] * B[i][j].
Wide evaluate_general_qap(const IntMatrix& a, const IntMatrix& b, const Permutation& perm);

struct DecompositionSplit {
    Wide z1;  // ordered pairs inside positions {1..k}
    Wide z2;  // ordered pairs inside the complement
    Wide z3;  // ordered pairs from {1..k} into the complement
};

/// Splits the objective across the position cut after k; the parts satisfy
/// z1 + z2 + 2*z3 == evaluate_objective(inst, perm).
DecompositionSplit decomposition_split(const WienerQapInstance& inst,
                                       const Permutation& perm, int k);

}  // namespace wqap

#endif
