#include "wqap/dp_solver.hpp"

#include <algorithm>
#include <utility>

namespace wqap {

namespace {

// Branch sentinels; real values are gated to |Z| <= 2^125.
constexpr Wide kNegInf = -(Wide(1) << 126);
constexpr Wide kPosInf = Wide(1) << 126;

std::int64_t checked_sum(const std::vector<std::int64_t>& values) {
    std::int64_t total = 0;
    for (std::int64_t v : values)
        if (__builtin_add_overflow(total, v, &total))
            throw Error(ErrorCode::Overflow, "value sum exceeds 64 bits");
    return total;
}

}  // namespace

SolveContext::SolveContext(std::vector<std::int64_t> value_by_level,
                           std::vector<int> id_by_level,
                           std::vector<std::int64_t> betas, Sense sense,
                           StateFilter filter)
    : n_(static_cast<int>(betas.size())), sense_(sense),
      filter_(std::move(filter)) {
    if (n_ < 1) throw Error(ErrorCode::Malformed, "empty point set");
    if (value_by_level.size() != betas.size() ||
        id_by_level.size() != betas.size())
        throw Error(ErrorCode::DimensionMismatch,
                    "schedule arrays must match the point count");
    // Shift to 1-based level indexing.
    value_by_level_.assign(n_ + 1, 0);
    id_by_level_.assign(n_ + 1, 0);
    betas_.assign(n_ + 1, 0);
    for (int k = 1; k <= n_; ++k) {
        value_by_level_[k] = value_by_level[k - 1];
        id_by_level_[k] = id_by_level[k - 1];
        betas_[k] = betas[k - 1];
    }
    std::int64_t total = checked_sum(value_by_level);
    others_sum_.assign(n_ + 1, 0);
    placed_sum_.assign(n_ + 1, 0);
    std::int64_t prefix = 0;
    for (int k = 1; k <= n_; ++k) {
        others_sum_[k] = prefix;
        prefix += value_by_level_[k];
        placed_sum_[k] = total - prefix;
    }
}

SolveContext SolveContext::for_max(const WienerQapInstance& inst) {
    int n = inst.size();
    std::vector<std::int64_t> values(inst.alphas());
    std::vector<int> ids(n);
    for (int k = 1; k <= n; ++k) ids[k - 1] = k;
    // Level k places alpha_k, the largest of the k still-unplaced values.
    return SolveContext(std::move(values), std::move(ids), inst.betas(),
                        Sense::Max);
}

SolveContext SolveContext::for_min(const WienerQapInstance& inst) {
    int n = inst.size();
    std::vector<std::int64_t> values(n);
    std::vector<int> ids(n);
    for (int k = 1; k <= n; ++k) {
        values[k - 1] = inst.alphas()[n - k];  // smallest remaining first
        ids[k - 1] = n + 1 - k;
    }
    return SolveContext(std::move(values), std::move(ids), inst.betas(),
                        Sense::Min);
}

bool SolveContext::admissible(int k, int m, std::int64_t left,
                              std::int64_t right) const {
    return !filter_ || filter_(k, m, left, right);
}

void SolveContext::check_state(int k, int m, std::int64_t left) const {
    if (k < 1 || k > n_)
        throw Error(ErrorCode::StateInvalid, "level outside 1..n");
    if (m < 1 || m > n_ - k + 1)
        throw Error(ErrorCode::StateInvalid, "window start outside 1..n-k+1");
    if (left < 0 || left > placed_sum_[k])
        throw Error(ErrorCode::StateInvalid,
                    "left mass outside the placed total");
    if (!admissible(k, m, left, placed_sum_[k] - left))
        throw Error(ErrorCode::StateInvalid, "state rejected by the filter");
}

int SolveContext::find_state(int k, int m, std::int64_t left) const {
    const Level& level = levels_[k];
    int lo = 0, hi = static_cast<int>(level.key_m.size());
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (level.key_m[mid] < m ||
            (level.key_m[mid] == m && level.key_left[mid] < left))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < static_cast<int>(level.key_m.size()) && level.key_m[lo] == m &&
        level.key_left[lo] == left)
        return lo;
    return -1;
}

void SolveContext::solve() { solve_from(n_, 1, 0); }

void SolveContext::solve_from(int k, int m, std::int64_t left_mass) {
    check_state(k, m, left_mass);
    root_k_ = k;
    root_m_ = m;
    root_left_ = left_mass;
    levels_.assign(n_ + 1, Level{});
    levels_[k].key_m = {m};
    levels_[k].key_left = {left_mass};

    // Reachability sweep: each state spawns a left child (m+1, L+v) and a
    // right child (m, L); both candidate lists inherit the parent order, so
    // one merge per level keeps keys sorted and unique.
    for (int level = root_k_; level >= 2; --level) {
        const Level& cur = levels_[level];
        std::int64_t v = value_by_level_[level];
        std::int64_t child_placed = placed_sum_[level - 1];
        std::size_t count = cur.key_m.size();
        std::vector<int> left_m, right_m;
        std::vector<std::int64_t> left_l, right_l;
        left_m.reserve(count);
        right_m.reserve(count);
        left_l.reserve(count);
        right_l.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            int cm = cur.key_m[i];
            std::int64_t cl = cur.key_left[i];
            if (admissible(level - 1, cm + 1, cl + v, child_placed - cl - v)) {
                left_m.push_back(cm + 1);
                left_l.push_back(cl + v);
            }
            if (admissible(level - 1, cm, cl, child_placed - cl)) {
                right_m.push_back(cm);
                right_l.push_back(cl);
            }
        }
        Level& child = levels_[level - 1];
        child.key_m.reserve(left_m.size() + right_m.size());
        child.key_left.reserve(left_m.size() + right_m.size());
        std::size_t a = 0, b = 0;
        auto push = [&child](int m_key, std::int64_t l_key) {
            if (!child.key_m.empty() && child.key_m.back() == m_key &&
                child.key_left.back() == l_key)
                return;
            child.key_m.push_back(m_key);
            child.key_left.push_back(l_key);
        };
        while (a < left_m.size() || b < right_m.size()) {
            bool take_left =
                b == right_m.size() ||
                (a < left_m.size() &&
                 (left_m[a] < right_m[b] ||
                  (left_m[a] == right_m[b] && left_l[a] <= right_l[b])));
            if (take_left) {
                push(left_m[a], left_l[a]);
                ++a;
            } else {
                push(right_m[b], right_l[b]);
                ++b;
            }
        }
    }

    // Value sweep upward. A window of one point has coincident duplicated
    // ends, so every level-1 state is worth zero.
    levels_[1].value.assign(levels_[1].key_m.size(), 0);
    levels_[1].place_right.assign(levels_[1].key_m.size(), 0);
    for (int level = 2; level <= root_k_; ++level) {
        Level& cur = levels_[level];
        const Level& child = levels_[level - 1];
        std::size_t count = cur.key_m.size();
        cur.value.resize(count);
        cur.place_right.resize(count);
        std::int64_t v = value_by_level_[level];
        std::int64_t others = others_sum_[level];
        std::int64_t placed = placed_sum_[level];
        bool maximize = sense_ == Sense::Max;
        for (std::size_t i = 0; i < count; ++i) {
            int m = cur.key_m[i];
            std::int64_t l = cur.key_left[i];
            std::int64_t r = placed - l;
            Wide best_left = maximize ? kNegInf : kPosInf;
            Wide best_right = best_left;
            int li = find_state(level - 1, m + 1, l + v);
            if (li >= 0)
                best_left = child.value[li] +
                            2 * Wide(l + v) * Wide(others + r) *
                                Wide(betas_[m + 1] - betas_[m]);
            int ri = find_state(level - 1, m, l);
            if (ri >= 0)
                best_right = child.value[ri] +
                             2 * Wide(l + others) * Wide(r + v) *
                                 Wide(betas_[m + level - 1] -
                                      betas_[m + level - 2]);
            if (li < 0 && ri < 0)
                throw Error(ErrorCode::InconsistentTables,
                            "state has no admissible transition");
            bool right =
                maximize ? best_right > best_left : best_right < best_left;
            cur.value[i] = right ? best_right : best_left;
            cur.place_right[i] = right ? 1 : 0;
        }
    }

    states_visited_ = 0;
    for (int level = 1; level <= root_k_; ++level)
        states_visited_ += levels_[level].key_m.size();
    solved_ = true;
}

Wide SolveContext::optimum() const {
    if (!solved_)
        throw Error(ErrorCode::InconsistentTables, "context not solved");
    int idx = find_state(root_k_, root_m_, root_left_);
    if (idx < 0)
        throw Error(ErrorCode::InconsistentTables, "root state missing");
    return levels_[root_k_].value[idx];
}

Wide SolveContext::state_value(int k, int m, std::int64_t left_mass) const {
    check_state(k, m, left_mass);
    if (solved_) {
        int idx = find_state(k, m, left_mass);
        if (idx >= 0) return levels_[k].value[idx];
    }
    // Not materialized by the root solve; solve the sub-root afresh.
    SolveContext sub(
        std::vector<std::int64_t>(value_by_level_.begin() + 1,
                                  value_by_level_.end()),
        std::vector<int>(id_by_level_.begin() + 1, id_by_level_.end()),
        std::vector<std::int64_t>(betas_.begin() + 1, betas_.end()), sense_,
        filter_);
    sub.solve_from(k, m, left_mass);
    return sub.optimum();
}

Assignment SolveContext::reconstruct() const {
    if (!solved_)
        throw Error(ErrorCode::InconsistentTables, "context not solved");
    if (root_k_ != n_ || root_m_ != 1 || root_left_ != 0)
        throw Error(ErrorCode::StateInvalid,
                    "reconstruction requires the full root solve");
    Permutation perm(n_, 0);
    int k = root_k_, m = root_m_;
    std::int64_t left = root_left_;
    while (k >= 1) {
        int idx = find_state(k, m, left);
        if (idx < 0)
            throw Error(ErrorCode::InconsistentTables,
                        "decision walk references a missing state");
        if (k == 1) {
            perm[m - 1] = id_by_level_[1];
            break;
        }
        if (levels_[k].place_right[idx]) {
            perm[m + k - 2] = id_by_level_[k];  // right end of the window
        } else {
            perm[m - 1] = id_by_level_[k];
            left += value_by_level_[k];
            ++m;
        }
        --k;
    }
    return Assignment::from(std::move(perm));
}

void SolveContext::for_each_state(
    const std::function<void(int, int, std::int64_t, Wide)>& fn) const {
    if (!solved_)
        throw Error(ErrorCode::InconsistentTables, "context not solved");
    for (int k = 1; k <= root_k_; ++k) {
        const Level& level = levels_[k];
        for (std::size_t i = 0; i < level.key_m.size(); ++i)
            fn(k, level.key_m[i], level.key_left[i], level.value[i]);
    }
}

namespace {

SolveResult run(SolveContext ctx, const WienerQapInstance& inst, Sense sense) {
    ctx.solve();
    Assignment assignment = ctx.reconstruct();
    Wide optimum = ctx.optimum();
    if (evaluate_objective(inst, assignment) != optimum)
        throw Error(ErrorCode::InconsistentTables,
                    "reconstructed permutation does not reproduce the optimum");
    return SolveResult{optimum, std::move(assignment), sense,
                       ctx.states_visited()};
}

}  // namespace

SolveResult solve_max(const WienerQapInstance& inst) {
    return run(SolveContext::for_max(inst), inst, Sense::Max);
}

SolveResult solve_min(const WienerQapInstance& inst) {
    return run(SolveContext::for_min(inst), inst, Sense::Min);
}

}  // namespace wqap
