#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "udvg/coloring.hpp"
#include "udvg/formula.hpp"
#include "udvg/graph.hpp"
#include "udvg/rational.hpp"
#include "udvg/reduce_sat.hpp"
#include "udvg/visibility.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>

using namespace udvg;

namespace {

Formula make_formula(std::size_t n, std::vector<std::array<std::uint32_t, 3>> cls) {
    Formula f;
    f.num_vars = n;
    f.clauses = std::move(cls);
    f.validate();
    return f;
}

std::string diff_report(const Graph& actual, const Graph& planned) {
    GraphDiff d = graph_diff(actual, planned);
    std::ostringstream os;
    os << "unplanned edges (in scene graph only): ";
    for (auto [u, v] : d.only_in_a) os << "(" << u << "," << v << ") ";
    os << "\nmissing edges (planned only): ";
    for (auto [u, v] : d.only_in_b) os << "(" << u << "," << v << ") ";
    return os.str();
}

// Master property: the compiled scene is valid and its unit disk visibility
// graph matches the planned graph edge-for-edge.
void check_compiled(const Formula& f) {
    auto [scene, cert] = compile_nae3sat(f);
    scene.validate_or_throw();
    Graph g = build_udvg(scene, ThresholdPolicy::Closed);
    bool same = graphs_equal(g, cert.planned);
    if (!same) INFO(diff_report(g, cert.planned));
    CHECK(same);
}

// Equisatisfiability plus witness decoding, checked against brute force.
void check_equisat(const Formula& f) {
    auto [scene, cert] = compile_nae3sat(f);
    Graph g = build_udvg(scene, ThresholdPolicy::Closed);
    auto coloring = solve_3coloring(g);
    auto truth = nae3sat_oracle(f);
    CHECK(coloring.has_value() == truth.has_value());
    if (coloring) {
        Assignment a = decode_assignment(f, cert, *coloring);
        CHECK(nae_satisfies(f, a));
    }
}

}  // namespace

TEST_CASE("example formula compiles to a scene matching its planned graph") {
    Formula f = make_formula(4, {{0, 2, 3}, {0, 1, 3}, {1, 2, 3}});
    check_compiled(f);
}

TEST_CASE("single variable, no clauses") {
    Formula f = make_formula(1, {});
    auto [scene, cert] = compile_nae3sat(f);
    scene.validate_or_throw();
    Graph g = build_udvg(scene, ThresholdPolicy::Closed);
    CHECK(graphs_equal(g, cert.planned));
    auto c = solve_3coloring(g);
    REQUIRE(c.has_value());
    Assignment a = decode_assignment(f, cert, *c);
    CHECK(a.size() == 1);
}

TEST_CASE("small formula battery: planned graph is exact") {
    check_compiled(make_formula(1, {{0, 0, 0}}));
    check_compiled(make_formula(2, {{0, 1, 1}}));
    check_compiled(make_formula(2, {{0, 0, 1}, {1, 1, 0}}));
    check_compiled(make_formula(3, {{0, 1, 2}}));
    check_compiled(make_formula(3, {{2, 2, 2}, {0, 1, 2}}));
    check_compiled(make_formula(4, {{1, 2, 3}, {0, 1, 2}}));
}

TEST_CASE("repeated-variable clause makes the scene uncolorable") {
    Formula f = make_formula(2, {{0, 0, 0}, {0, 1, 1}});
    auto [scene, cert] = compile_nae3sat(f);
    Graph g = build_udvg(scene, ThresholdPolicy::Closed);
    CHECK(!solve_3coloring(g).has_value());
    CHECK(!nae3sat_oracle(f).has_value());
}

TEST_CASE("equisatisfiability battery against brute force") {
    check_equisat(make_formula(2, {{0, 1, 1}}));
    check_equisat(make_formula(2, {{0, 0, 1}, {1, 1, 0}}));
    check_equisat(make_formula(3, {{0, 1, 2}, {0, 1, 1}}));
    check_equisat(make_formula(3, {{0, 1, 2}, {1, 2, 2}, {0, 2, 2}}));
    check_equisat(make_formula(1, {{0, 0, 0}}));  // unsatisfiable
}

TEST_CASE("random formulas stay equisatisfiable") {
    std::mt19937 rng(20260826);
    for (int t = 0; t < 4; ++t) {
        std::size_t n = 2 + rng() % 2;
        std::size_t m = 1 + rng() % 2;
        std::vector<std::array<std::uint32_t, 3>> cls;
        for (std::size_t c = 0; c < m; ++c) {
            std::array<std::uint32_t, 3> cl;
            for (auto& v : cl) v = static_cast<std::uint32_t>(rng() % n);
            cls.push_back(cl);
        }
        check_equisat(make_formula(n, std::move(cls)));
    }
}

TEST_CASE("coordinates stay on a coarse grid") {
    Formula f = make_formula(3, {{0, 1, 2}, {1, 2, 2}});
    auto [scene, cert] = compile_nae3sat(f);
    mpz_class bound(1 << 16);
    for (const auto& s : scene.segments) {
        for (const Point* p : {&s.a, &s.b}) {
            CHECK(p->x.den() <= bound);
            CHECK(p->y.den() <= bound);
        }
    }
}

TEST_CASE("segment count is linear in n + total crossings") {
    // Every clause adds O(1) lanes and each lane crosses at most n rows, so
    // the scene holds O(n + n*m) segments.  Check a generous concrete bound.
    for (std::size_t n : {2u, 3u, 4u}) {
        std::vector<std::array<std::uint32_t, 3>> cls;
        for (std::uint32_t c = 0; c + 2 < n; ++c) cls.push_back({c, c + 1, c + 2});
        if (cls.empty()) cls.push_back({0, 1, 1});
        Formula f = make_formula(n, cls);
        auto [scene, cert] = compile_nae3sat(f);
        std::size_t m = f.clauses.size();
        CHECK(scene.segments.size() <= 400 * (n + n * m + 1));
    }
}

TEST_CASE("decode rejects a coloring that breaks the certificate") {
    Formula f = make_formula(2, {{0, 1, 1}});
    auto [scene, cert] = compile_nae3sat(f);
    Graph g = build_udvg(scene, ThresholdPolicy::Closed);
    auto c = solve_3coloring(g);
    REQUIRE(c.has_value());
    Coloring bad = *c;
    bad[cert.variable_anchor.at(0)] = bad[cert.neutral_anchor];
    CHECK_THROWS_AS(decode_assignment(f, cert, bad), CorruptWitness);
    Coloring wrong_size(3, 0);
    CHECK_THROWS_AS(decode_assignment(f, cert, wrong_size), CorruptWitness);
}
