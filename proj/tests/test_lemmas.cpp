#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "udvg/gadgets.hpp"
#include "udvg/lemmas.hpp"
#include "udvg/visibility.hpp"

#include <random>

using namespace udvg;

namespace {

Point pt(long xn, long xd, long yn, long yd) {
    return Point{Rational(xn, xd), Rational(yn, yd)};
}

Graph points_graph(const std::vector<Point>& pts, ThresholdPolicy policy) {
    Scene s;
    s.kind = SceneKind::Points;
    s.points = pts;
    return build_udvg(s, policy);
}

}  // namespace

TEST_CASE("scale_to_unit: worked example") {
    const auto out = scale_to_unit({pt(3, 1, 4, 1), pt(0, 1, 0, 1)});
    CHECK(out[0].x == Rational(3, 16));
    CHECK(out[0].y == Rational(1, 4));
    CHECK(out[1].x == Rational(0));
    CHECK(out[1].y == Rational(0));
}

TEST_CASE("scale_to_unit: all-zero set and empty input") {
    const auto out = scale_to_unit({pt(0, 1, 0, 1)});
    CHECK(out[0].x == Rational(0));
    CHECK_THROWS(scale_to_unit({}));
}

TEST_CASE("scale_to_unit: result fits in a diameter-1 disk") {
    const auto out = scale_to_unit({pt(-100, 1, 3, 1), pt(7, 2, -63, 1), pt(1, 3, 1, 7)});
    for (const Point& p : out) {
        CHECK(abs(p.x) < Rational(1, 2));
        CHECK(abs(p.y) < Rational(1, 2));
    }
}

TEST_CASE("scale_to_unit: orientation of every triple is preserved") {
    const std::vector<Point> pts = {pt(0, 1, 0, 1), pt(5, 1, 1, 1), pt(2, 1, 9, 1),
                                    pt(-3, 1, 4, 1), pt(1, 2, 1, 2)};
    const auto out = scale_to_unit(pts);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
            for (std::size_t k = 0; k < pts.size(); ++k)
                CHECK(orientation(pts[i], pts[j], pts[k]) == orientation(out[i], out[j], out[k]));
}

TEST_CASE("scale_to_unit: visibility graph collapses into the unit disk version") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long> coord(-50, 50);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Point> pts;
        while (pts.size() < 8) {
            Point p = pt(coord(rng), 1, coord(rng), 1);
            bool dup = false;
            for (const Point& q : pts) dup = dup || (q == p);
            if (!dup) pts.push_back(p);
        }
        const auto scaled = scale_to_unit(pts);
        const Graph vg = points_graph(pts, ThresholdPolicy::Unbounded);
        CHECK(graphs_equal(vg, points_graph(scaled, ThresholdPolicy::Unbounded)));
        CHECK(graphs_equal(vg, points_graph(scaled, ThresholdPolicy::Closed)));
    }
}

TEST_CASE("find_induced_k16: star and clique base cases") {
    Graph star(7);
    for (std::size_t i = 1; i < 7; ++i) star.add_edge(0, i);
    star.finalize();
    const auto found = find_induced_k16(star);
    REQUIRE(found.has_value());
    CHECK((*found)[0] == 0);
    CHECK(found->size() == 7);

    Graph k4(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) k4.add_edge(i, j);
    k4.finalize();
    CHECK(!find_induced_k16(k4).has_value());
}

TEST_CASE("find_induced_k16: near miss with adjacent leaves") {
    // Center with six neighbors, two of which are adjacent: no induced K_{1,6}.
    Graph g(7);
    for (std::size_t i = 1; i < 7; ++i) g.add_edge(0, i);
    g.add_edge(1, 2);
    g.finalize();
    CHECK(!find_induced_k16(g).has_value());
}

TEST_CASE("find_induced_k16: succeeds on all three visibility fixtures") {
    for (const GadgetFixture& fx : k16_fixtures()) {
        CAPTURE(fx.name);
        const Graph g = build_udvg(fx.scene, ThresholdPolicy::Closed);
        const auto found = find_induced_k16(g);
        REQUIRE(found.has_value());
        const std::size_t center = (*found)[0];
        for (std::size_t i = 1; i < 7; ++i) {
            CHECK(g.has_edge(center, (*found)[i]));
            for (std::size_t j = i + 1; j < 7; ++j) CHECK(!g.has_edge((*found)[i], (*found)[j]));
        }
    }
}

TEST_CASE("perturb_general_position: collinear triple gets separated") {
    const std::vector<Point> pts = {pt(0, 1, 0, 1), pt(1, 1, 0, 1), pt(2, 1, 0, 1)};
    const Rational budget(1, 100);
    const auto out = perturb_general_position(pts, budget);
    CHECK(orientation(out[0], out[1], out[2]) != 0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(abs(out[i].x - pts[i].x) <= budget);
        CHECK(abs(out[i].y - pts[i].y) <= budget);
    }
}

TEST_CASE("perturb_general_position: general position input is unchanged") {
    const std::vector<Point> pts = {pt(0, 1, 0, 1), pt(1, 1, 0, 1), pt(0, 1, 1, 1),
                                    pt(5, 1, 7, 1)};
    const auto out = perturb_general_position(pts, Rational(1, 10));
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(out[i] == pts[i]);
}

TEST_CASE("perturb_general_position: grid with many collinearities") {
    std::vector<Point> pts;
    for (long x = 0; x < 4; ++x)
        for (long y = 0; y < 4; ++y) pts.push_back(pt(x, 1, y, 1));
    const Rational budget(1, 1000);
    const auto out = perturb_general_position(pts, budget);
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            for (std::size_t k = j + 1; k < out.size(); ++k)
                CHECK(orientation(out[i], out[j], out[k]) != 0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(abs(out[i].x - pts[i].x) <= budget);
        CHECK(abs(out[i].y - pts[i].y) <= budget);
    }
    CHECK_THROWS(perturb_general_position(pts, Rational(0)));
}
