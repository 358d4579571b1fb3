#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "wqap/oracle.hpp"

using namespace wqap;

namespace {

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

TEST_CASE("brute force on the worked example") {
    WienerQapInstance inst({1, 2, 3}, {0, 1, 2});
    auto max_result = brute_force(inst, Sense::Max);
    CHECK(max_result.optimum == 34);
    CHECK(max_result.optimal_count == 2);  // the two mirror-image optima
    CHECK(evaluate_objective(inst, max_result.witness) == 34);

    auto min_result = brute_force(inst, Sense::Min);
    CHECK(min_result.optimum == 26);
    CHECK(min_result.optimal_count == 2);

    WienerQapInstance one({4}, {9});
    auto single = brute_force(one, Sense::Max);
    CHECK(single.optimum == 0);
    CHECK(single.optimal_count == 1);
    CHECK(single.witness.perm == Permutation{1});

    CHECK_THROWS_AS(
        brute_force(WienerQapInstance(std::vector<std::int64_t>(10, 1),
                                      std::vector<std::int64_t>(10, 0)),
                    Sense::Max),
        Error);
}

TEST_CASE("restricted brute force on the worked example") {
    WienerQapInstance inst({1, 2, 3}, {0, 1, 2});
    CHECK(brute_force_restricted(inst, Sense::Max, Shape::VShaped) == 34);
    CHECK(brute_force_restricted(inst, Sense::Min, Shape::Pyramidal) == 26);

    WienerQapInstance two({2, 5}, {1, 4});
    CHECK(brute_force_restricted(two, Sense::Max, Shape::VShaped) ==
          2 * 2 * 5 * 3);
    CHECK(brute_force_restricted(two, Sense::Min, Shape::Pyramidal) ==
          2 * 2 * 5 * 3);
}

TEST_CASE("wiener index of small named trees") {
    CHECK(wiener_index(Tree::from_edges(2, {{1, 2}})) == 1);
    // path on four vertices
    CHECK(wiener_index(Tree::from_edges(4, {{1, 2}, {2, 3}, {3, 4}})) == 10);
    // star with three leaves
    CHECK(wiener_index(Tree::from_edges(4, {{1, 2}, {1, 3}, {1, 4}})) == 9);
    CHECK(wiener_index(Tree{1, {}}) == 0);
}

TEST_CASE("paths and stars match their closed forms") {
    for (int r = 2; r <= 9; ++r) {
        std::vector<std::pair<int, int>> path_edges, star_edges;
        for (int i = 1; i < r; ++i) {
            path_edges.emplace_back(i, i + 1);
            star_edges.emplace_back(1, i + 1);
        }
        Wide r_wide = r;
        CHECK(wiener_index(Tree::from_edges(r, path_edges)) ==
              (r_wide * r_wide * r_wide - r_wide) / 6);
        CHECK(wiener_index(Tree::from_edges(r, star_edges)) ==
              Wide(r - 1) * Wide(r - 1));
    }
}

TEST_CASE("tree construction rejects non-trees") {
    CHECK_THROWS_AS(Tree::from_edges(3, {{1, 2}}), Error);
    CHECK_THROWS_AS(Tree::from_edges(3, {{1, 2}, {1, 2}}), Error);
    CHECK_THROWS_AS(Tree::from_edges(3, {{1, 2}, {4, 3}}), Error);
    CHECK_THROWS_AS(Tree::from_edges(2, {{1, 1}}), Error);
}

TEST_CASE("prufer code round trips") {
    std::mt19937_64 rng(91);
    for (int iter = 0; iter < 200; ++iter) {
        int r = 3 + static_cast<int>(rng() % 7);
        std::vector<int> word(r - 2);
        for (auto& s : word) s = 1 + static_cast<int>(rng() % r);
        Tree t = prufer_decode(word, r);
        CHECK(prufer_encode(t) == word);
    }
    // tiny sizes
    CHECK(prufer_decode({}, 2).edges ==
          std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(prufer_decode({}, 1).edges.empty());
    CHECK(prufer_encode(Tree::from_edges(2, {{1, 2}})).empty());
}

TEST_CASE("tree enumeration counts and values") {
    {
        auto d = validate_degree_sequence({1, 1});
        TreeEnumerator en(d);
        int count = 0;
        while (auto t = en.next()) {
            CHECK(t->edges == std::vector<std::pair<int, int>>{{1, 2}});
            ++count;
        }
        CHECK(count == 1);
    }
    {
        // two interior labels fixed as interior: exactly the labeled paths
        auto d = validate_degree_sequence({2, 2, 1, 1});
        TreeEnumerator en(d);
        int count = 0;
        while (auto t = en.next()) {
            CHECK(wiener_index(*t) == 10);
            ++count;
        }
        CHECK(count == 2);
    }
    {
        auto d = validate_degree_sequence({3, 3, 1, 1, 1, 1});
        TreeEnumerator en(d);
        int count = 0;
        while (auto t = en.next()) {
            CHECK(wiener_index(*t) == 29);
            ++count;
        }
        CHECK(count == 6);  // 4! / (2! 2!) double stars
    }
    CHECK_THROWS_AS(
        TreeEnumerator(validate_degree_sequence(
            {2, 2, 2, 2, 2, 2, 2, 2, 1, 1})),
        Error);  // r = 10 over the default cap
}

TEST_CASE("enumerated trees realize the degree multiset exactly") {
    auto d = validate_degree_sequence({4, 3, 2, 1, 1, 1, 1, 1});
    std::multiset<std::int64_t> want(d.degrees().begin(), d.degrees().end());
    TreeEnumerator en(d);
    std::uint64_t count = 0;
    while (auto t = en.next()) {
        std::vector<int> deg(t->vertex_count + 1, 0);
        for (auto [u, v] : t->edges) {
            ++deg[u];
            ++deg[v];
        }
        std::multiset<std::int64_t> got(deg.begin() + 1, deg.end());
        CHECK(got == want);
        ++count;
    }
    // word {1,2,2,3,3,3}: 6! / (2! 3!) distinct arrangements
    CHECK(count == factorial(6) / (factorial(2) * factorial(3)));
}

TEST_CASE("caterpillar enumeration on the three-profile example") {
    auto d = validate_degree_sequence({3, 3, 2, 1, 1, 1, 1});
    CaterpillarEnumerator en(d);
    std::map<std::vector<std::int64_t>, Wide> profiles;
    while (auto p = en.next()) profiles[p->ell] = p->wiener;
    CHECK(profiles.size() == 3);
    CHECK(profiles.at({2, 0, 2}) == 48);
    CHECK(profiles.at({2, 1, 1}) == 46);
    CHECK(profiles.at({1, 1, 2}) == 46);
}

TEST_CASE("caterpillar enumeration degenerate families") {
    {
        // path: a single profile with the path closed form
        auto d = validate_degree_sequence({2, 2, 2, 1, 1});
        CaterpillarEnumerator en(d);
        int count = 0;
        while (auto p = en.next()) {
            CHECK(p->wiener == (Wide(125) - 5) / 6);
            ++count;
        }
        CHECK(count == 1);
    }
    {
        // star: single profile, (r-1)^2
        auto d = validate_degree_sequence({4, 1, 1, 1, 1});
        CaterpillarEnumerator en(d);
        auto p = en.next();
        REQUIRE(p.has_value());
        CHECK(p->ell == std::vector<std::int64_t>{4});
        CHECK(p->wiener == 16);
        CHECK_FALSE(en.next().has_value());
    }
}

TEST_CASE("caterpillar profiles agree with BFS on the realized tree") {
    std::mt19937_64 rng(93);
    for (auto raw : std::vector<std::vector<std::int64_t>>{
             {3, 3, 2, 1, 1, 1, 1},
             {4, 2, 2, 1, 1, 1, 1},
             {3, 2, 2, 2, 1, 1, 1},
             {2, 2, 1, 1},
         }) {
        auto d = validate_degree_sequence(raw);
        CaterpillarEnumerator en(d);
        while (auto p = en.next()) {
            auto cat = caterpillar_from_ell(d, p->ell);
            CHECK(cat.wiener == p->wiener);
        }
    }
}

TEST_CASE("maximizers over all trees are caterpillars (exhaustive check)") {
    for (auto raw : std::vector<std::vector<std::int64_t>>{
             {2, 2, 1, 1},
             {3, 3, 1, 1, 1, 1},
             {3, 3, 2, 1, 1, 1, 1},
             {4, 2, 2, 1, 1, 1, 1},
             {2, 2, 2, 2, 2, 1, 1},
             {5, 3, 1, 1, 1, 1, 1, 1},
         }) {
        auto d = validate_degree_sequence(raw);
        Wide best_tree = -1;
        TreeEnumerator trees(d);
        while (auto t = trees.next()) {
            Wide w = wiener_index(*t);
            if (w > best_tree) best_tree = w;
        }
        Wide best_cat = -1;
        CaterpillarEnumerator cats(d);
        while (auto p = cats.next())
            if (p->wiener > best_cat) best_cat = p->wiener;
        CHECK(best_tree == best_cat);
    }
}
