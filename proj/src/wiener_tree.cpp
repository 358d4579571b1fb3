#include "wqap/wiener_tree.hpp"

#include <algorithm>
#include <string>

#include "wqap/errors.hpp"
#include "wqap/oracle.hpp"

namespace wqap {

std::vector<std::int64_t> DegreeSequence::backbone() const {
    return {degrees_.begin(), degrees_.begin() + backbone_count_};
}

DegreeSequence validate_degree_sequence(const std::vector<std::int64_t>& raw) {
    if (raw.empty()) throw Error(ErrorCode::Empty, "no degrees given");
    DegreeSequence d;
    if (raw.size() == 1) {
        // The one-vertex tree: a single degree-0 entry, the only size-1
        // sequence compatible with the sum condition 2r-2 = 0.
        if (raw[0] != 0)
            throw Error(ErrorCode::NotATreeDegreeSequence,
                        "a single vertex must have degree 0");
        d.degrees_ = {0};
        d.backbone_count_ = 0;
        return d;
    }
    std::int64_t sum = 0;
    for (std::int64_t v : raw) {
        if (v <= 0)
            throw Error(ErrorCode::NotATreeDegreeSequence,
                        "degrees must be positive");
        if (__builtin_add_overflow(sum, v, &sum))
            throw Error(ErrorCode::Overflow, "degree sum exceeds 64 bits");
    }
    auto r = static_cast<std::int64_t>(raw.size());
    if (sum != 2 * r - 2)
        throw Error(ErrorCode::NotATreeDegreeSequence,
                    "degree sum is " + std::to_string(sum) + ", expected " +
                        std::to_string(2 * r - 2));
    // Backbone degrees ascending, then the leaf 1s.
    std::vector<std::int64_t> backbone, leaves;
    for (std::int64_t v : raw)
        (v >= 2 ? backbone : leaves).push_back(v);
    std::sort(backbone.begin(), backbone.end());
    d.backbone_count_ = static_cast<int>(backbone.size());
    d.degrees_ = std::move(backbone);
    d.degrees_.insert(d.degrees_.end(), leaves.begin(), leaves.end());
    return d;
}

ConstrainedInstance build_constrained_instance(const DegreeSequence& d) {
    int n = d.backbone_count();
    if (n < 2)
        throw Error(ErrorCode::BackboneTooShort,
                    "constrained instance needs a backbone of length >= 2");
    ConstrainedInstance inst;
    inst.n = n;
    inst.alphas.reserve(n + 2);
    for (std::int64_t deg : d.backbone()) inst.alphas.push_back(deg - 1);
    inst.alphas.push_back(1);
    inst.alphas.push_back(1);
    inst.betas.reserve(n + 2);
    inst.betas.push_back(1);
    for (int i = 2; i <= n + 1; ++i) inst.betas.push_back(i - 1);
    inst.betas.push_back(n);
    inst.pin_low = {n + 1, 1};
    inst.pin_high = {n + 2, n + 2};
    return inst;
}

namespace {

// Fixed leaf labeling: backbone vertices are 1..n in backbone order, leaves
// n+1..r grouped by backbone position.
std::vector<std::pair<int, int>> caterpillar_edges(
    const std::vector<std::int64_t>& ell, int n, int r) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(r - 1);
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    int next_leaf = n + 1;
    for (int i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < ell[i]; ++j)
            edges.emplace_back(i + 1, next_leaf++);
    return edges;
}

std::vector<std::int64_t> ell_from_arrangement(
    const std::vector<std::int64_t>& arrangement) {
    int n = static_cast<int>(arrangement.size());
    std::vector<std::int64_t> ell(n);
    for (int i = 0; i < n; ++i) {
        bool end = i == 0 || i == n - 1;
        // A lone backbone vertex has no backbone neighbors at all.
        std::int64_t spine_neighbors = n == 1 ? 0 : (end ? 1 : 2);
        ell[i] = arrangement[i] - spine_neighbors;
    }
    return ell;
}

Caterpillar degenerate_caterpillar(int r) {
    Caterpillar cat;
    cat.r = r;
    cat.n = 0;
    if (r == 2) {
        cat.edges = {{1, 2}};
        cat.wiener = 1;
    }
    return cat;
}

}  // namespace

Wide wiener_from_ell(const std::vector<std::int64_t>& ell, int n, int r) {
    if (static_cast<int>(ell.size()) != n)
        throw Error(ErrorCode::IncompatibleEll,
                    "profile length differs from backbone length");
    std::int64_t leaf_total = 0;
    for (std::int64_t v : ell) {
        if (v < 0)
            throw Error(ErrorCode::IncompatibleEll, "negative leaf count");
        leaf_total += v;
    }
    if (leaf_total != r - n)
        throw Error(ErrorCode::IncompatibleEll,
                    "leaf counts must sum to r - n");
    Wide s = leaf_total;
    Wide total = s * s + Wide(n - 1) * s;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            total += Wide(ell[i] + 1) * Wide(ell[j] + 1) * Wide(j - i);
    return total;
}

Caterpillar caterpillar_from_ell(const DegreeSequence& d,
                                 const std::vector<std::int64_t>& ell) {
    int n = d.backbone_count();
    int r = d.r();
    if (n < 1)
        throw Error(ErrorCode::IncompatibleEll,
                    "no backbone to attach leaves to");
    if (static_cast<int>(ell.size()) != n)
        throw Error(ErrorCode::IncompatibleEll,
                    "profile length differs from backbone length");
    std::int64_t leaf_total = 0;
    for (std::int64_t v : ell) {
        if (v < 0)
            throw Error(ErrorCode::IncompatibleEll, "negative leaf count");
        leaf_total += v;
    }
    if (leaf_total != r - n)
        throw Error(ErrorCode::IncompatibleEll,
                    "leaf counts must sum to r - n");

    std::vector<std::int64_t> implied(n);
    for (int i = 0; i < n; ++i) {
        bool end = i == 0 || i == n - 1;
        implied[i] = ell[i] + (n == 1 ? 0 : (end ? 1 : 2));
    }
    std::vector<std::int64_t> sorted_implied(implied);
    std::sort(sorted_implied.begin(), sorted_implied.end());
    if (sorted_implied != d.backbone())
        throw Error(ErrorCode::IncompatibleEll,
                    "profile does not realize the backbone degrees");

    Caterpillar cat;
    cat.r = r;
    cat.n = n;
    cat.ell = ell;
    cat.backbone_degrees = implied;
    cat.edges = caterpillar_edges(ell, n, r);
    cat.wiener = wiener_index(Tree::from_edges(r, cat.edges));
    return cat;
}

TreeSolveResult solve_max_wiener(const DegreeSequence& d) {
    int r = d.r();
    int n = d.backbone_count();
    if (r <= 2) return {degenerate_caterpillar(r), 0};
    if (n == 1) {
        // Star: the single backbone vertex carries every leaf.
        Caterpillar cat;
        cat.r = r;
        cat.n = 1;
        cat.ell = {r - 1};
        cat.backbone_degrees = {r - 1};
        cat.edges = caterpillar_edges(cat.ell, 1, r);
        cat.wiener = Wide(r - 1) * Wide(r - 1);
        return {std::move(cat), 0};
    }

    // Specialized DP over (k, L): the window coordinate is dropped since all
    // backbone gaps are unit. L and R start at 1 from the two pinned unit
    // values sitting on the duplicated outer points.
    std::vector<std::int64_t> alpha(n);
    {
        auto backbone = d.backbone();
        for (int i = 0; i < n; ++i) alpha[i] = backbone[i] - 1;
    }
    std::vector<std::int64_t> prefix(n + 1, 0);  // sum of alpha below level k
    for (int k = 1; k <= n; ++k) prefix[k] = prefix[k - 1] + alpha[k - 1];
    std::vector<std::int64_t> placed(n + 1, 0);  // L + R at level k
    for (int k = 1; k <= n; ++k) placed[k] = 2 + prefix[n] - prefix[k];

    // Reachable left masses per level as bitsets: every reachable state at
    // level k spawns children at L and L + alpha_k.
    auto words_for = [](std::int64_t bits) {
        return static_cast<std::size_t>(bits / 64 + 1);
    };
    std::vector<std::vector<std::uint64_t>> reach(n + 1);
    auto test_bit = [](const std::vector<std::uint64_t>& row, std::int64_t i) {
        return (row[i / 64] >> (i % 64)) & 1u;
    };
    auto set_bit = [](std::vector<std::uint64_t>& row, std::int64_t i) {
        row[i / 64] |= std::uint64_t(1) << (i % 64);
    };
    reach[n].assign(words_for(placed[n]), 0);
    set_bit(reach[n], 1);
    for (int k = n; k >= 2; --k) {
        reach[k - 1].assign(words_for(placed[k - 1]), 0);
        std::int64_t shift = alpha[k - 1];
        for (std::int64_t l = 1; l <= placed[k] - 1; ++l)
            if (test_bit(reach[k], l)) {
                set_bit(reach[k - 1], l);
                set_bit(reach[k - 1], l + shift);
            }
    }

    std::uint64_t states = 0;
    for (int k = 1; k <= n; ++k)
        for (std::int64_t l = 0; l <= placed[k]; ++l)
            if (test_bit(reach[k], l)) ++states;

    // Value sweep with two rolling rows; decision bits kept for all levels.
    std::vector<std::vector<std::uint64_t>> go_right(n + 1);
    std::vector<Wide> below(placed[1] + 1, 0);  // level 1: single-point window
    for (int k = 2; k <= n; ++k) {
        std::vector<Wide> cur(placed[k] + 1, 0);
        go_right[k].assign(words_for(placed[k]), 0);
        std::int64_t v = alpha[k - 1];
        std::int64_t m = prefix[k - 1];
        for (std::int64_t l = 1; l <= placed[k] - 1; ++l) {
            if (!test_bit(reach[k], l)) continue;
            std::int64_t rmass = placed[k] - l;
            Wide z_left = below[l + v] + 2 * Wide(l + v) * Wide(m + rmass);
            Wide z_right = below[l] + 2 * Wide(l + m) * Wide(rmass + v);
            if (z_right > z_left) {
                cur[l] = z_right;
                set_bit(go_right[k], l);
            } else {
                cur[l] = z_left;
            }
        }
        below = std::move(cur);
    }
    Wide z_star = below[1];

    // Decision walk: level k places backbone value k at an end of the
    // remaining slot range.
    std::vector<std::int64_t> arrangement(n, 0);
    {
        int lo = 0, hi = n - 1;
        std::int64_t l = 1;
        auto backbone = d.backbone();
        for (int k = n; k >= 2; --k) {
            if (test_bit(go_right[k], l)) {
                arrangement[hi--] = backbone[k - 1];
            } else {
                arrangement[lo++] = backbone[k - 1];
                l += alpha[k - 1];
            }
        }
        arrangement[lo] = backbone[0];
    }

    Caterpillar cat;
    cat.r = r;
    cat.n = n;
    cat.backbone_degrees = arrangement;
    cat.ell = ell_from_arrangement(arrangement);
    cat.edges = caterpillar_edges(cat.ell, n, r);
    Wide leaves = r - n;
    cat.wiener = leaves * leaves + Wide(n - 1) * leaves + z_star / 2;
    if (z_star % 2 != 0 || cat.wiener != wiener_from_ell(cat.ell, n, r))
        throw Error(ErrorCode::InconsistentTables,
                    "reconstructed profile does not reproduce the optimum");
    return {std::move(cat), states};
}

}  // namespace wqap
