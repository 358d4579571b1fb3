#include "wqap/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "wqap/objective.hpp"

namespace wqap {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

std::vector<std::vector<int>> adjacency(const Tree& t) {
    std::vector<std::vector<int>> adj(t.vertex_count + 1);
    for (auto [u, v] : t.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

}  // namespace

Tree Tree::from_edges(int vertex_count,
                      std::vector<std::pair<int, int>> edges) {
    if (vertex_count < 1)
        throw Error(ErrorCode::Malformed, "tree needs at least one vertex");
    if (edges.size() != static_cast<std::size_t>(vertex_count) - 1)
        throw Error(ErrorCode::Malformed,
                    "a tree on r vertices has exactly r-1 edges");
    UnionFind uf(vertex_count + 1);
    for (auto [u, v] : edges) {
        if (u < 1 || u > vertex_count || v < 1 || v > vertex_count || u == v)
            throw Error(ErrorCode::Malformed, "edge endpoint out of range");
        if (!uf.unite(u, v))
            throw Error(ErrorCode::Malformed, "edges contain a cycle");
    }
    // r-1 successful unions on r vertices imply connectivity.
    return Tree{vertex_count, std::move(edges)};
}

Wide wiener_index(const Tree& t) {
    auto adj = adjacency(t);
    Wide total = 0;
    std::vector<int> dist(t.vertex_count + 1);
    std::vector<int> queue_buf;
    queue_buf.reserve(t.vertex_count);
    for (int src = 1; src <= t.vertex_count; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        queue_buf.clear();
        queue_buf.push_back(src);
        dist[src] = 0;
        for (std::size_t head = 0; head < queue_buf.size(); ++head) {
            int u = queue_buf[head];
            total += dist[u];
            for (int v : adj[u])
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    queue_buf.push_back(v);
                }
        }
    }
    return total / 2;  // every unordered pair was counted from both sides
}

std::vector<int> prufer_encode(const Tree& t) {
    int r = t.vertex_count;
    if (r <= 2) return {};
    auto adj = adjacency(t);
    std::vector<int> degree(r + 1, 0);
    for (int v = 1; v <= r; ++v) degree[v] = static_cast<int>(adj[v].size());
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 1; v <= r; ++v)
        if (degree[v] == 1) leaves.push(v);
    std::vector<bool> removed(r + 1, false);
    std::vector<int> word;
    word.reserve(r - 2);
    while (static_cast<int>(word.size()) < r - 2) {
        int leaf = leaves.top();
        leaves.pop();
        removed[leaf] = true;
        int neighbor = -1;
        for (int v : adj[leaf])
            if (!removed[v]) neighbor = v;
        word.push_back(neighbor);
        if (--degree[neighbor] == 1) leaves.push(neighbor);
    }
    return word;
}

Tree prufer_decode(const std::vector<int>& word, int vertex_count) {
    int r = vertex_count;
    if (r < 1) throw Error(ErrorCode::Malformed, "vertex count must be >= 1");
    if (static_cast<int>(word.size()) != std::max(r - 2, 0))
        throw Error(ErrorCode::Malformed, "word length must be r-2");
    if (r == 1) return Tree{1, {}};
    std::vector<int> degree(r + 1, 1);
    for (int s : word) {
        if (s < 1 || s > r)
            throw Error(ErrorCode::Malformed, "word symbol out of range");
        ++degree[s];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 1; v <= r; ++v)
        if (degree[v] == 1) leaves.push(v);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(r - 1);
    for (int s : word) {
        int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, s);
        if (--degree[s] == 1) leaves.push(s);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    edges.emplace_back(a, b);
    return Tree::from_edges(r, std::move(edges));
}

BruteForceResult brute_force(const WienerQapInstance& inst, Sense sense,
                             int cap) {
    int n = inst.size();
    if (n > cap)
        throw Error(ErrorCode::InstanceTooLarge,
                    "instance size " + std::to_string(n) +
                        " exceeds the enumeration cap " + std::to_string(cap));
    Permutation perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    bool maximize = sense == Sense::Max;
    Wide best = 0;
    std::uint64_t count = 0;
    Permutation witness;
    do {
        Wide value = evaluate_objective(inst, perm);
        if (count == 0 || (maximize ? value > best : value < best)) {
            best = value;
            count = 1;
            witness = perm;
        } else if (value == best) {
            ++count;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return BruteForceResult{best, count, Assignment::from(std::move(witness))};
}

Wide brute_force_restricted(const WienerQapInstance& inst, Sense sense,
                            Shape shape, int cap) {
    if (shape != Shape::VShaped && shape != Shape::Pyramidal)
        throw Error(ErrorCode::BadParams,
                    "restricted enumeration covers VShaped and Pyramidal");
    int n = inst.size();
    if (n > cap)
        throw Error(ErrorCode::InstanceTooLarge,
                    "instance size " + std::to_string(n) +
                        " exceeds the enumeration cap " + std::to_string(cap));
    bool maximize = sense == Sense::Max;
    bool want_v = shape == Shape::VShaped;
    Wide best = 0;
    bool have = false;
    // A shaped permutation is fixed by choosing, for every value except the
    // extreme one, the side of the arrangement it lands on.
    Permutation perm(n);
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        int pos = 0;
        if (want_v) {
            // chosen values descend on the left, the rest ascend after 1
            for (int v = n; v >= 2; --v)
                if (mask & (1u << (v - 2))) perm[pos++] = v;
            perm[pos++] = 1;
            for (int v = 2; v <= n; ++v)
                if (!(mask & (1u << (v - 2)))) perm[pos++] = v;
        } else {
            for (int v = 1; v < n; ++v)
                if (mask & (1u << (v - 1))) perm[pos++] = v;
            perm[pos++] = n;
            for (int v = n - 1; v >= 1; --v)
                if (!(mask & (1u << (v - 1)))) perm[pos++] = v;
        }
        Wide value = evaluate_objective(inst, perm);
        if (!have || (maximize ? value > best : value < best)) {
            best = value;
            have = true;
        }
    }
    return best;
}

TreeEnumerator::TreeEnumerator(const DegreeSequence& d, int cap)
    : vertex_count_(d.r()) {
    if (d.r() > cap)
        throw Error(ErrorCode::InstanceTooLarge,
                    "vertex count " + std::to_string(d.r()) +
                        " exceeds the enumeration cap " + std::to_string(cap));
    const auto& degrees = d.degrees();
    for (int v = 1; v <= d.r(); ++v)
        for (std::int64_t c = 1; c < degrees[v - 1]; ++c) word_.push_back(v);
    // Vertex i appears degree_i - 1 times; the ascending start lets
    // next_permutation visit every distinct arrangement exactly once.
    std::sort(word_.begin(), word_.end());
}

std::optional<Tree> TreeEnumerator::next() {
    if (exhausted_) return std::nullopt;
    if (!first_ && !std::next_permutation(word_.begin(), word_.end())) {
        exhausted_ = true;
        return std::nullopt;
    }
    first_ = false;
    if (word_.empty()) exhausted_ = true;  // single tree for r <= 2
    return prufer_decode(word_, vertex_count_);
}

CaterpillarEnumerator::CaterpillarEnumerator(const DegreeSequence& d, int cap)
    : r_(d.r()), arrangement_(d.backbone()) {
    if (d.backbone_count() > cap)
        throw Error(ErrorCode::InstanceTooLarge,
                    "backbone length " + std::to_string(d.backbone_count()) +
                        " exceeds the enumeration cap " + std::to_string(cap));
}

std::optional<CaterpillarProfile> CaterpillarEnumerator::next() {
    if (exhausted_) return std::nullopt;
    if (!first_ &&
        !std::next_permutation(arrangement_.begin(), arrangement_.end())) {
        exhausted_ = true;
        return std::nullopt;
    }
    first_ = false;
    int n = static_cast<int>(arrangement_.size());
    if (n == 0) {
        // Degenerate trees without a backbone: one profile, fixed index.
        exhausted_ = true;
        return CaterpillarProfile{{}, r_ == 2 ? Wide(1) : Wide(0)};
    }
    std::vector<std::int64_t> ell(n);
    for (int i = 0; i < n; ++i) {
        bool end = i == 0 || i == n - 1;
        ell[i] = arrangement_[i] - (n == 1 ? 0 : (end ? 1 : 2));
    }
    Wide w = wiener_from_ell(ell, n, r_);
    return CaterpillarProfile{std::move(ell), w};
}

}  // namespace wqap
