#ifndef WQAP_DP_SOLVER_HPP
#define WQAP_DP_SOLVER_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "wqap/arith.hpp"
#include "wqap/instance.hpp"
#include "wqap/objective.hpp"
#include "wqap/permutation.hpp"

namespace wqap {

/// State of the window dynamic program: k values still unplaced on the point
/// window starting at m; L and R are the value masses already placed to the
/// left and right of the window.
struct DpState {
    int k;
    int m;
    std::int64_t left_mass;   // L
    std::int64_t right_mass;  // R, determined by k and L
};

struct SolveResult {
    Wide optimum;
    Assignment assignment;
    Sense sense;
    std::uint64_t states_visited;
};

/// Optional admissibility predicate on states (k, m, L, R). States failing
/// it are never generated; used by the pinned tree instance.
using StateFilter = std::function<bool(int, int, std::int64_t, std::int64_t)>;

/**
 * Level-by-level solver for the structured QAP. Each level k places one
 * value at the left or right end of the remaining point window; only states
 * reachable from the root are materialized. The traversal is an explicit
 * work list over levels, so recursion depth never depends on n.
 *
 * The engine is parameterized by a peel schedule: value_by_level[k] is the
 * value placed while k values remain (the largest remaining value for the
 * max sense, the smallest for min), id_by_level[k] its 1-based identity in
 * the instance. After solve() the per-level tables stay readable: value
 * lookups via state_value, decisions via reconstruct.
 */
class SolveContext {
public:
    static SolveContext for_max(const WienerQapInstance& inst);
    static SolveContext for_min(const WienerQapInstance& inst);

    /// Generic schedule; used by the constrained tree emulation and tests.
    SolveContext(std::vector<std::int64_t> value_by_level,
                 std::vector<int> id_by_level,
                 std::vector<std::int64_t> betas,
                 Sense sense,
                 StateFilter filter = nullptr);

    /// Runs the tables from the root state (N, 1, 0, 0).
    void solve();

    /// Runs the tables from an arbitrary admissible root state.
    void solve_from(int k, int m, std::int64_t left_mass);

    bool solved() const { return solved_; }
    Sense sense() const { return sense_; }
    int dimension() const { return n_; }
    Wide optimum() const;
    std::uint64_t states_visited() const { return states_visited_; }

    /// Optimum of the sub-problem rooted at (k, m, L). Reads the table when
    /// the state was materialized, otherwise solves it as a fresh sub-root.
    /// Throws StateInvalid if the triple violates the state conditions.
    Wide state_value(int k, int m, std::int64_t left_mass) const;

    /// Walks the decision bits from the root; the returned permutation
    /// assigns value identities to points and evaluates to the optimum.
    Assignment reconstruct() const;

    /// Iterates all materialized states as (k, m, L, Z).
    void for_each_state(
        const std::function<void(int, int, std::int64_t, Wide)>& fn) const;

    /// L + R at level k: the total mass already placed outside the window.
    std::int64_t placed_sum(int k) const { return placed_sum_[k]; }

private:
    struct Level {
        std::vector<int> key_m;             // sorted by (m, L), unique
        std::vector<std::int64_t> key_left;
        std::vector<Wide> value;
        std::vector<std::uint8_t> place_right;  // decision bit per state
    };

    bool admissible(int k, int m, std::int64_t left, std::int64_t right) const;
    int find_state(int k, int m, std::int64_t left) const;
    void check_state(int k, int m, std::int64_t left) const;

    int n_ = 0;  // total number of levels / points
    std::vector<std::int64_t> value_by_level_;  // 1-based by level
    std::vector<int> id_by_level_;
    std::vector<std::int64_t> betas_;           // 1-based points
    std::vector<std::int64_t> others_sum_;      // sum of values below level k
    std::vector<std::int64_t> placed_sum_;      // total minus values at levels <= k
    Sense sense_ = Sense::Max;
    StateFilter filter_;

    std::vector<Level> levels_;  // index by level k
    int root_k_ = 0;
    int root_m_ = 0;
    std::int64_t root_left_ = 0;
    bool solved_ = false;
    std::uint64_t states_visited_ = 0;
};

/// Maximizes the objective; the witness permutation is V-shaped.
SolveResult solve_max(const WienerQapInstance& inst);

/// Minimizes the objective; the witness permutation is pyramidal.
SolveResult solve_min(const WienerQapInstance& inst);

}  // namespace wqap

#endif
