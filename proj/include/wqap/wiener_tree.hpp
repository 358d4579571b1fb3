#ifndef WQAP_WIENER_TREE_HPP
#define WQAP_WIENER_TREE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "wqap/arith.hpp"

namespace wqap {

/**
 * A validated tree degree sequence, normalized so that the backbone degrees
 * (those >= 2) come first in non-decreasing order, followed by the 1s of the
 * leaves. r entries summing to 2r-2.
 */
class DegreeSequence {
public:
    const std::vector<std::int64_t>& degrees() const { return degrees_; }
    int r() const { return static_cast<int>(degrees_.size()); }
    int backbone_count() const { return backbone_count_; }  // n
    int leaf_count() const { return r() - backbone_count_; }

    /// The n backbone degrees, ascending.
    std::vector<std::int64_t> backbone() const;

    friend DegreeSequence validate_degree_sequence(
        const std::vector<std::int64_t>& raw);

private:
    std::vector<std::int64_t> degrees_;
    int backbone_count_ = 0;
};

/// Throws Empty on an empty input, NotATreeDegreeSequence when the sum is
/// not 2r-2 or an entry is non-positive. The singleton (0) is accepted as
/// the one-vertex tree.
DegreeSequence validate_degree_sequence(const std::vector<std::int64_t>& raw);

/**
 * The (n+2)-dimensional pinned QAP encoding a caterpillar with backbone
 * length n: values d_i - 1 plus two extra unit values that are pinned to
 * duplicated outer points. The alpha layout follows the pin indices and is
 * deliberately not globally sorted.
 */
struct ConstrainedInstance {
    std::vector<std::int64_t> alphas;  // d_1-1, ..., d_n-1, 1, 1
    std::vector<std::int64_t> betas;   // 1, 1, 2, ..., n, n
    int n = 0;                         // backbone length; dimension is n+2
    std::pair<int, int> pin_low;       // value n+1 -> point 1
    std::pair<int, int> pin_high;      // value n+2 -> point n+2
};

/// Requires a backbone of at least two vertices (BackboneTooShort).
ConstrainedInstance build_constrained_instance(const DegreeSequence& d);

struct Caterpillar {
    std::vector<std::int64_t> ell;              // leaves per backbone position
    std::vector<std::int64_t> backbone_degrees; // degree placed per position
    std::vector<std::pair<int, int>> edges;     // 1-based vertex labels
    Wide wiener = 0;
    int r = 0;
    int n = 0;
};

struct TreeSolveResult {
    Caterpillar caterpillar;
    std::uint64_t states_visited = 0;
};

/// Maximizes the Wiener index over all trees with degree sequence d via the
/// specialized O(r^2) dynamic program over (k, L) states.
TreeSolveResult solve_max_wiener(const DegreeSequence& d);

/// Realizes an explicit caterpillar: backbone path v_1..v_n labeled 1..n,
/// ell[i] pendant leaves on v_i labeled n+1..r grouped by position. The
/// Wiener index is computed by BFS on the realized tree.
Caterpillar caterpillar_from_ell(const DegreeSequence& d,
                                 const std::vector<std::int64_t>& ell);

/// Closed-form Wiener index of a caterpillar with the given leaf profile.
Wide wiener_from_ell(const std::vector<std::int64_t>& ell, int n, int r);

}  // namespace wqap

#endif
