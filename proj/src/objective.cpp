#include "wqap/objective.hpp"

#include <cstdlib>

namespace wqap {

Wide evaluate_objective(const WienerQapInstance& inst, const Permutation& perm) {
    validate_permutation(perm);
    if (static_cast<int>(perm.size()) != inst.size())
        throw Error(ErrorCode::PermutationInvalid,
                    "permutation length differs from instance size");
    const auto& alphas = inst.alphas();
    const auto& betas = inst.betas();
    int n = inst.size();
    // Instance construction bounds the total, so plain accumulation is exact.
    Wide total = 0;
    for (int i = 0; i < n; ++i) {
        Wide wi = alphas[perm[i] - 1];
        for (int j = i + 1; j < n; ++j) {
            Wide wj = alphas[perm[j] - 1];
            total += 2 * wi * wj * (betas[j] - betas[i]);
        }
    }
    return total;
}

Wide evaluate_general_qap(const IntMatrix& a, const IntMatrix& b,
                          const Permutation& perm) {
    if (a.n != b.n)
        throw Error(ErrorCode::DimensionMismatch,
                    "matrices must have equal dimension");
    validate_permutation(perm);
    if (static_cast<int>(perm.size()) != a.n)
        throw Error(ErrorCode::PermutationInvalid,
                    "permutation length differs from matrix dimension");
    Wide total = 0;
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) {
            Wide term = checked_mul(Wide(a.at(perm[i] - 1, perm[j] - 1)),
                                    Wide(b.at(i, j)));
            total = checked_add(total, term);
        }
    return total;
}

DecompositionSplit decomposition_split(const WienerQapInstance& inst,
                                       const Permutation& perm, int k) {
    validate_permutation(perm);
    if (static_cast<int>(perm.size()) != inst.size())
        throw Error(ErrorCode::PermutationInvalid,
                    "permutation length differs from instance size");
    if (k < 1 || k > inst.size())
        throw Error(ErrorCode::IndexOutOfRange, "split index outside 1..n");
    const auto& alphas = inst.alphas();
    const auto& betas = inst.betas();
    int n = inst.size();
    DecompositionSplit split{0, 0, 0};
    for (int i = 0; i < n; ++i) {
        Wide wi = alphas[perm[i] - 1];
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Wide term = wi * Wide(alphas[perm[j] - 1]) *
                        Wide(std::abs(betas[i] - betas[j]));
            bool i_in = i < k, j_in = j < k;
            if (i_in && j_in)
                split.z1 += term;
            else if (!i_in && !j_in)
                split.z2 += term;
            else if (i_in)  // ordered pair leaving the prefix block
                split.z3 += term;
        }
    }
    return split;
}

}  // namespace wqap
