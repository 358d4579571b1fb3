#ifndef WQAP_ORACLE_HPP
#define WQAP_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wqap/arith.hpp"
#include "wqap/instance.hpp"
#include "wqap/permutation.hpp"
#include "wqap/wiener_tree.hpp"

namespace wqap {

// Exhaustive enumeration sizes; callers may raise them explicitly.
inline constexpr int kDefaultOracleCap = 9;

/// A connected acyclic graph; construction verifies both properties.
struct Tree {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // 1-based labels

    static Tree from_edges(int vertex_count,
                           std::vector<std::pair<int, int>> edges);
};

/// Sum of shortest-path distances over unordered vertex pairs, by BFS from
/// every vertex.
Wide wiener_index(const Tree& t);

std::vector<int> prufer_encode(const Tree& t);
Tree prufer_decode(const std::vector<int>& word, int vertex_count);

struct BruteForceResult {
    Wide optimum;
    std::uint64_t optimal_count;
    Assignment witness;
};

/// Ground truth by enumerating all n! permutations.
BruteForceResult brute_force(const WienerQapInstance& inst, Sense sense,
                             int cap = kDefaultOracleCap);

/// Optimum over exactly the 2^(n-1) permutations of the given shape.
Wide brute_force_restricted(const WienerQapInstance& inst, Sense sense,
                            Shape shape, int cap = kDefaultOracleCap);

/**
 * Streams every labeled tree whose degree multiset equals d, as the distinct
 * arrangements of the Prufer word that contains vertex i exactly d_i - 1
 * times. Lazy; consumers may stop early.
 */
class TreeEnumerator {
public:
    explicit TreeEnumerator(const DegreeSequence& d,
                            int cap = kDefaultOracleCap);
    std::optional<Tree> next();

private:
    int vertex_count_;
    std::vector<int> word_;
    bool exhausted_ = false;
    bool first_ = true;
};

struct CaterpillarProfile {
    std::vector<std::int64_t> ell;
    Wide wiener;
};

/**
 * Streams every placement of the backbone degrees along the backbone (all
 * distinct multiset permutations), with the leaf profile implied by the
 * end/interior rule and the closed-form Wiener index.
 */
class CaterpillarEnumerator {
public:
    explicit CaterpillarEnumerator(const DegreeSequence& d,
                                   int cap = kDefaultOracleCap);
    std::optional<CaterpillarProfile> next();

private:
    int r_;
    std::vector<std::int64_t> arrangement_;  // backbone degrees, current order
    bool exhausted_ = false;
    bool first_ = true;
};

}  // namespace wqap

#endif
