#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "wqap/dp_solver.hpp"
#include "wqap/gen.hpp"
#include "wqap/oracle.hpp"
#include "wqap/wiener_tree.hpp"

using namespace wqap;

namespace {

// The pinned (n+2)-dimensional instance run through the generic solver,
// peeling values by index so the two pinned unit values go first; the state
// filters force them onto the duplicated outer points.
SolveContext pinned_context(const ConstrainedInstance& ci) {
    int nb = ci.n;
    int dim = nb + 2;
    std::vector<int> ids(dim);
    for (int k = 1; k <= dim; ++k) ids[k - 1] = k;
    StateFilter filter = [nb](int k, int m, std::int64_t l, std::int64_t r) {
        if (k <= nb) return m >= 2 && m <= nb - k + 2 && l >= 1 && r >= 1;
        if (k == nb + 1) return m == 1 && l == 0 && r == 1;
        return m == 1 && l == 0 && r == 0;
    };
    return SolveContext(ci.alphas, ids, ci.betas, Sense::Max,
                        std::move(filter));
}

Wide wiener_via_pinned_qap(const DegreeSequence& d) {
    auto ci = build_constrained_instance(d);
    auto ctx = pinned_context(ci);
    ctx.solve();
    Wide leaves = d.leaf_count();
    return leaves * leaves + Wide(d.backbone_count() - 1) * leaves +
           ctx.optimum() / 2;
}

Wide max_over_caterpillars(const DegreeSequence& d, int cap = 9) {
    CaterpillarEnumerator en(d, cap);
    Wide best = -1;
    while (auto p = en.next())
        if (p->wiener > best) best = p->wiener;
    return best;
}

Wide max_over_all_trees(const DegreeSequence& d, int cap = 9) {
    TreeEnumerator en(d, cap);
    Wide best = -1;
    while (auto t = en.next()) {
        Wide w = wiener_index(*t);
        if (w > best) best = w;
    }
    return best;
}

}  // namespace

TEST_CASE("degree sequence validation") {
    auto d = validate_degree_sequence({1, 2, 2, 1});
    CHECK(d.r() == 4);
    CHECK(d.backbone_count() == 2);
    CHECK(d.leaf_count() == 2);
    CHECK(d.degrees() == std::vector<std::int64_t>{2, 2, 1, 1});

    CHECK_THROWS_AS(validate_degree_sequence({1, 1, 1}), Error);
    CHECK_THROWS_AS(validate_degree_sequence({}), Error);
    CHECK_THROWS_AS(validate_degree_sequence({2, -1, 1, 1, 1}), Error);

    auto sorted = validate_degree_sequence({3, 1, 3, 1, 1, 1});
    CHECK(sorted.degrees() == std::vector<std::int64_t>{3, 3, 1, 1, 1, 1});
    CHECK(sorted.backbone_count() == 2);

    // the one-vertex tree
    auto lone = validate_degree_sequence({0});
    CHECK(lone.r() == 1);
    CHECK(lone.backbone_count() == 0);
    CHECK_THROWS_AS(validate_degree_sequence({0, 0}), Error);
}

TEST_CASE("constrained instance construction") {
    {
        auto d = validate_degree_sequence({3, 3, 2, 1, 1, 1, 1});
        auto ci = build_constrained_instance(d);
        CHECK(ci.n == 3);
        CHECK(ci.alphas == std::vector<std::int64_t>{1, 2, 2, 1, 1});
        CHECK(ci.betas == std::vector<std::int64_t>{1, 1, 2, 3, 3});
        CHECK(ci.pin_low == std::pair<int, int>{4, 1});
        CHECK(ci.pin_high == std::pair<int, int>{5, 5});
    }
    {
        auto d = validate_degree_sequence({2, 2, 1, 1});
        auto ci = build_constrained_instance(d);
        CHECK(ci.alphas == std::vector<std::int64_t>{1, 1, 1, 1});
        CHECK(ci.betas == std::vector<std::int64_t>{1, 1, 2, 2});
        CHECK(ci.pin_low == std::pair<int, int>{3, 1});
        CHECK(ci.pin_high == std::pair<int, int>{4, 4});
    }
    CHECK_THROWS_AS(
        build_constrained_instance(validate_degree_sequence({4, 1, 1, 1, 1})),
        Error);
}

TEST_CASE("wiener_from_ell closed form") {
    CHECK(wiener_from_ell({2, 0, 2}, 3, 7) == 48);  // 16 + 8 + 24
    for (int r = 2; r <= 12; ++r) {
        std::vector<std::int64_t> zeros(r, 0);
        Wide rw = r;
        CHECK(wiener_from_ell(zeros, r, r) == (rw * rw * rw - rw) / 6);
    }
    for (int r = 3; r <= 12; ++r)
        CHECK(wiener_from_ell({r - 1}, 1, r) == Wide(r - 1) * Wide(r - 1));
    CHECK_THROWS_AS(wiener_from_ell({1, 1}, 2, 5), Error);
    CHECK_THROWS_AS(wiener_from_ell({-1, 3}, 2, 4), Error);
}

TEST_CASE("caterpillar_from_ell") {
    {
        auto d = validate_degree_sequence({2, 2, 1, 1});
        auto cat = caterpillar_from_ell(d, {1, 1});
        CHECK(cat.wiener == 10);
        CHECK(cat.edges.size() == 3);
        CHECK_THROWS_AS(caterpillar_from_ell(d, {2, 0}), Error);
        CHECK_THROWS_AS(caterpillar_from_ell(d, {2, 1}), Error);
    }
    {
        auto d = validate_degree_sequence({3, 3, 2, 1, 1, 1, 1});
        auto cat = caterpillar_from_ell(d, {2, 0, 2});
        CHECK(cat.wiener == 48);
        CHECK(cat.backbone_degrees == std::vector<std::int64_t>{3, 2, 3});
        // an ell profile that no placement of {2,3,3} realizes
        CHECK_THROWS_AS(caterpillar_from_ell(d, {0, 2, 2}), Error);
    }
}

TEST_CASE("solve_max_wiener on the worked examples") {
    {
        auto res = solve_max_wiener(validate_degree_sequence({2, 2, 1, 1}));
        CHECK(res.caterpillar.wiener == 10);
        CHECK(res.caterpillar.ell == std::vector<std::int64_t>{1, 1});
    }
    {
        auto res =
            solve_max_wiener(validate_degree_sequence({3, 3, 1, 1, 1, 1}));
        CHECK(res.caterpillar.wiener == 29);
        CHECK(res.caterpillar.ell == std::vector<std::int64_t>{2, 2});
    }
    {
        auto res = solve_max_wiener(
            validate_degree_sequence({3, 3, 2, 1, 1, 1, 1}));
        CHECK(res.caterpillar.wiener == 48);
        CHECK(res.caterpillar.ell == std::vector<std::int64_t>{2, 0, 2});
        CHECK(res.caterpillar.backbone_degrees ==
              std::vector<std::int64_t>{3, 2, 3});
    }
}

TEST_CASE("solve_max_wiener degenerate sizes") {
    auto lone = solve_max_wiener(validate_degree_sequence({0}));
    CHECK(lone.caterpillar.wiener == 0);
    CHECK(lone.caterpillar.edges.empty());

    auto edge = solve_max_wiener(validate_degree_sequence({1, 1}));
    CHECK(edge.caterpillar.wiener == 1);
    CHECK(edge.caterpillar.edges ==
          std::vector<std::pair<int, int>>{{1, 2}});

    auto star = solve_max_wiener(validate_degree_sequence({4, 1, 1, 1, 1}));
    CHECK(star.caterpillar.wiener == 16);
    CHECK(star.caterpillar.ell == std::vector<std::int64_t>{4});
}

TEST_CASE("closed-form extremes across sizes") {
    for (int r = 2; r <= 50; ++r) {
        std::vector<std::int64_t> path(r, 2);
        path[0] = path[1] = 1;
        Wide rw = r;
        CHECK(solve_max_wiener(validate_degree_sequence(path))
                  .caterpillar.wiener == (rw * rw * rw - rw) / 6);

        std::vector<std::int64_t> star(r, 1);
        star[0] = r - 1;
        if (r >= 2)
            CHECK(solve_max_wiener(validate_degree_sequence(star))
                      .caterpillar.wiener == Wide(r - 1) * Wide(r - 1));
    }
}

TEST_CASE("solver matches the caterpillar oracle on random sequences") {
    std::mt19937_64 rng(101);
    int done = 0;
    while (done < 60) {
        int r = 2 + static_cast<int>(rng() % 11);
        auto d = validate_degree_sequence(
            generate_degree_sequence(r, rng()));
        if (d.backbone_count() > 9) continue;
        auto res = solve_max_wiener(d);
        CHECK(res.caterpillar.wiener == max_over_caterpillars(d));
        ++done;
    }
}

TEST_CASE("solver matches the full tree oracle on small sequences") {
    std::mt19937_64 rng(102);
    int done = 0;
    while (done < 40) {
        int r = 2 + static_cast<int>(rng() % 8);
        auto d = validate_degree_sequence(
            generate_degree_sequence(r, rng()));
        auto res = solve_max_wiener(d);
        CHECK(res.caterpillar.wiener == max_over_all_trees(d));
        ++done;
    }
}

TEST_CASE("reconstructed caterpillars realize the input degrees") {
    std::mt19937_64 rng(103);
    for (int iter = 0; iter < 40; ++iter) {
        int r = 3 + static_cast<int>(rng() % 30);
        auto d = validate_degree_sequence(generate_degree_sequence(r, rng()));
        auto res = solve_max_wiener(d);
        const auto& cat = res.caterpillar;
        std::vector<std::int64_t> deg(r + 1, 0);
        for (auto [u, v] : cat.edges) {
            ++deg[u];
            ++deg[v];
        }
        std::multiset<std::int64_t> got(deg.begin() + 1, deg.end());
        std::multiset<std::int64_t> want(d.degrees().begin(),
                                         d.degrees().end());
        CHECK(got == want);
        CHECK(wiener_index(Tree::from_edges(r, cat.edges)) == cat.wiener);
    }
}

TEST_CASE("pinned generic solver agrees with the specialized DP") {
    std::mt19937_64 rng(104);
    int done = 0;
    while (done < 25) {
        int r = 4 + static_cast<int>(rng() % 9);
        auto d = validate_degree_sequence(generate_degree_sequence(r, rng()));
        if (d.backbone_count() < 2) continue;
        auto res = solve_max_wiener(d);
        CHECK(res.caterpillar.wiener == wiener_via_pinned_qap(d));
        ++done;
    }
}

TEST_CASE("pinned state values do not depend on the window position") {
    std::mt19937_64 rng(105);
    int done = 0;
    while (done < 10) {
        int r = 5 + static_cast<int>(rng() % 7);
        auto d = validate_degree_sequence(generate_degree_sequence(r, rng()));
        if (d.backbone_count() < 3) continue;
        auto ctx = pinned_context(build_constrained_instance(d));
        ctx.solve();
        // group materialized states by (k, L); Z must be constant across m
        std::map<std::pair<int, std::int64_t>, std::set<long long>> groups;
        ctx.for_each_state([&groups](int k, int, std::int64_t l, Wide z) {
            groups[{k, l}].insert(static_cast<long long>(z));
        });
        for (const auto& [key, zs] : groups) CHECK(zs.size() == 1);
        ++done;
    }
}

TEST_CASE("tree DP state count stays quadratic") {
    std::mt19937_64 rng(106);
    for (int iter = 0; iter < 20; ++iter) {
        int r = 3 + static_cast<int>(rng() % 60);
        auto d = validate_degree_sequence(generate_degree_sequence(r, rng()));
        auto res = solve_max_wiener(d);
        CHECK(res.states_visited <= 8ull * std::uint64_t(r) * std::uint64_t(r));
    }
}
