#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "udvg/coloring.hpp"

using namespace udvg;

namespace {

Graph make(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    g.finalize();
    return g;
}

Graph k(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    g.finalize();
    return g;
}

}  // namespace

TEST_CASE("verifier accepts proper and rejects improper colorings") {
    const Graph g = k(3);
    CHECK(coloring_is_proper(g, {0, 1, 2}));
    CHECK(!coloring_is_proper(g, {0, 0, 1}));
    CHECK(!coloring_is_proper(g, {0, 1}));  // partial
}

TEST_CASE("triangle gets the first lexicographic witness") {
    const auto c = solve_3coloring(k(3));
    REQUIRE(c.has_value());
    CHECK(*c == Coloring{0, 1, 2});
}

TEST_CASE("K4 is not 3-colorable") { CHECK(!solve_3coloring(k(4)).has_value()); }

TEST_CASE("odd cycle is 3-colorable") {
    const Graph c5 = make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    const auto c = solve_3coloring(c5);
    REQUIRE(c.has_value());
    CHECK(coloring_is_proper(c5, *c));
}

TEST_CASE("witness is deterministic across calls") {
    const Graph g = make(7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 3}});
    const auto a = solve_3coloring(g);
    const auto b = solve_3coloring(g);
    REQUIRE(a.has_value());
    CHECK(*a == *b);
}

TEST_CASE("precoloring is honored and can force unsatisfiability") {
    const Graph g = k(3);
    Precoloring pre(3, -1);
    pre[0] = 2;
    const auto c = solve_3coloring(g, pre);
    REQUIRE(c.has_value());
    CHECK((*c)[0] == 2);
    CHECK(coloring_is_proper(g, *c));

    // Path a-b with both ends forced equal: still fine; triangle with two
    // equal forced corners: unsatisfiable.
    pre[1] = 2;
    CHECK(!solve_3coloring(g, pre).has_value());
}

TEST_CASE("satisfiability is invariant under permuting a precoloring") {
    const Graph g = make(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}});
    for (int p0 = 0; p0 < 3; ++p0) {
        for (int p1 = 0; p1 < 3; ++p1) {
            if (p1 == p0) continue;
            Precoloring pre(6, -1);
            pre[0] = static_cast<std::int8_t>(p0);
            pre[5] = static_cast<std::int8_t>(p1);
            CHECK(solve_3coloring(g, pre).has_value());
        }
    }
}

TEST_CASE("enumeration of a triangle") {
    auto up = enumerate_3colorings(k(3), {.up_to_permutation = true});
    CHECK(up.colorings.size() == 1);
    CHECK(up.colorings[0] == Coloring{0, 1, 2});
    CHECK(!up.truncated);
    auto all = enumerate_3colorings(k(3), {.up_to_permutation = false});
    CHECK(all.colorings.size() == 6);
}

TEST_CASE("labeled count is 6x the orbit count when a triangle is present") {
    const Graph g = make(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
    auto up = enumerate_3colorings(g, {.up_to_permutation = true});
    auto all = enumerate_3colorings(g, {.up_to_permutation = false});
    CHECK(all.colorings.size() == 6 * up.colorings.size());
    for (const auto& c : up.colorings) {
        CHECK(coloring_is_proper(g, c));
        CHECK(c == canonical_coloring(c));
    }
}

TEST_CASE("enumeration agrees with the solver on satisfiability") {
    const Graph sat = make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const Graph unsat = k(4);
    CHECK(solve_3coloring(sat).has_value() == !enumerate_3colorings(sat).colorings.empty());
    CHECK(solve_3coloring(unsat).has_value() == !enumerate_3colorings(unsat).colorings.empty());
}

TEST_CASE("enumeration cap truncates") {
    // Two disjoint triangles: 36 labeled colorings, 6 orbit representatives.
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 3);
    g.finalize();
    auto res = enumerate_3colorings(g, {.up_to_permutation = true, .cap = 2});
    CHECK(res.colorings.size() == 2);
    CHECK(res.truncated);
}

TEST_CASE("canonical coloring picks the least orbit member") {
    CHECK(canonical_coloring({2, 1, 0}) == Coloring{0, 1, 2});
    CHECK(canonical_coloring({1, 1, 2, 0}) == Coloring{0, 0, 1, 2});
}
