#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "udvg/geometry.hpp"

using namespace udvg;

namespace {
Point pt(const char* x, const char* y) { return {Rational::parse(x), Rational::parse(y)}; }
}  // namespace

TEST_CASE("orientation sign convention") {
    CHECK(orientation(pt("0", "0"), pt("1", "0"), pt("0", "1")) == 1);   // left turn
    CHECK(orientation(pt("0", "0"), pt("0", "1"), pt("1", "0")) == -1);  // right turn
    CHECK(orientation(pt("0", "0"), pt("1", "1"), pt("2", "2")) == 0);   // collinear
    // Near-collinear case that double arithmetic misjudges.
    CHECK(orientation(pt("0", "0"), pt("1000000000", "1000000001"),
                      pt("2000000000", "2000000002")) == 0);
}

TEST_CASE("squared distance and threshold policies") {
    const Point a = pt("0", "2.1"), b = pt("0.6", "2.9");
    CHECK(sq_dist(a, b) == Rational(1));  // 0.36 + 0.64
    CHECK(within_unit(a, b, ThresholdPolicy::Closed));
    CHECK(!within_unit(a, b, ThresholdPolicy::Strict));
    CHECK(within_unit(a, b, ThresholdPolicy::Unbounded));
    CHECK(!within_unit(pt("0", "0"), pt("1", "1/1000000"), ThresholdPolicy::Closed));
}

TEST_CASE("point on segment classification") {
    const Point a = pt("0", "0"), b = pt("4", "2");
    CHECK(on_segment(pt("2", "1"), a, b));
    CHECK(on_segment(a, a, b));
    CHECK(!on_segment(pt("2", "1.0000001"), a, b));
    CHECK(strictly_inside_segment(pt("2", "1"), a, b));
    CHECK(!strictly_inside_segment(a, a, b));
    CHECK(!strictly_inside_segment(pt("6", "3"), a, b));
}

TEST_CASE("segment intersection: proper crossing with exact point") {
    const auto si = segments_intersect(pt("0", "0"), pt("2", "2"), pt("0", "2"), pt("2", "0"));
    REQUIRE(si.kind == SegIntersectKind::ProperCross);
    REQUIRE(si.point.has_value());
    CHECK(si.point->x == Rational(1));
    CHECK(si.point->y == Rational(1));
}

TEST_CASE("segment intersection: rational crossing point") {
    const auto si = segments_intersect(pt("0", "0"), pt("1", "1"), pt("0", "1"), pt("1", "0.5"));
    REQUIRE(si.kind == SegIntersectKind::ProperCross);
    CHECK(si.point->x == Rational(2, 3));
    CHECK(si.point->y == Rational(2, 3));
}

TEST_CASE("segment intersection: endpoint touch") {
    const auto si = segments_intersect(pt("0", "0"), pt("1", "0"), pt("1", "0"), pt("2", "1"));
    REQUIRE(si.kind == SegIntersectKind::PointTouch);
    CHECK(*si.point == pt("1", "0"));
    // T-touch: endpoint of one segment interior to the other.
    const auto ti = segments_intersect(pt("0", "0"), pt("2", "0"), pt("1", "0"), pt("1", "1"));
    REQUIRE(ti.kind == SegIntersectKind::PointTouch);
    CHECK(*ti.point == pt("1", "0"));
}

TEST_CASE("segment intersection: collinear cases") {
    const auto ov = segments_intersect(pt("0", "0"), pt("2", "0"), pt("1", "0"), pt("3", "0"));
    REQUIRE(ov.kind == SegIntersectKind::CollinearOverlap);
    CHECK(*ov.overlap_a == pt("1", "0"));
    CHECK(*ov.overlap_b == pt("2", "0"));
    // Collinear, sharing exactly one endpoint: a touch, not an overlap.
    const auto touch = segments_intersect(pt("0", "0"), pt("1", "0"), pt("1", "0"), pt("2", "0"));
    CHECK(touch.kind == SegIntersectKind::PointTouch);
    // Collinear, disjoint.
    const auto none = segments_intersect(pt("0", "0"), pt("1", "0"), pt("2", "0"), pt("3", "0"));
    CHECK(none.kind == SegIntersectKind::Empty);
    // Parallel, not collinear.
    const auto par = segments_intersect(pt("0", "0"), pt("1", "0"), pt("0", "1"), pt("1", "1"));
    CHECK(par.kind == SegIntersectKind::Empty);
}

TEST_CASE("segment intersection: near miss stays empty") {
    const auto si =
        segments_intersect(pt("0", "0"), pt("1", "0"), pt("1/2", "1/1000000000"), pt("1", "1"));
    CHECK(si.kind == SegIntersectKind::Empty);
}

TEST_CASE("point in ring with holes") {
    const std::vector<Point> square = {pt("0", "0"), pt("4", "0"), pt("4", "4"), pt("0", "4")};
    CHECK(point_in_ring(pt("2", "2"), square) == PointLocation::StrictInterior);
    CHECK(point_in_ring(pt("4", "2"), square) == PointLocation::OnBoundary);
    CHECK(point_in_ring(pt("0", "0"), square) == PointLocation::OnBoundary);
    CHECK(point_in_ring(pt("5", "2"), square) == PointLocation::Exterior);
    // Ray through a vertex must not double-count.
    CHECK(point_in_ring(pt("-1", "0"), square) == PointLocation::Exterior);

    const std::vector<Point> hole = {pt("1", "1"), pt("3", "1"), pt("3", "3"), pt("1", "3")};
    CHECK(point_in_polygon(pt("2", "2"), square, {hole}) == PointLocation::Exterior);
    CHECK(point_in_polygon(pt("1", "2"), square, {hole}) == PointLocation::OnBoundary);
    CHECK(point_in_polygon(pt("1/2", "2"), square, {hole}) == PointLocation::StrictInterior);
}

TEST_CASE("ring simplicity and signed area") {
    const std::vector<Point> square = {pt("0", "0"), pt("4", "0"), pt("4", "4"), pt("0", "4")};
    CHECK(ring_is_simple(square));
    CHECK(signed_area2(square) == Rational(32));  // twice the area, CCW positive
    const std::vector<Point> bowtie = {pt("0", "0"), pt("2", "2"), pt("2", "0"), pt("0", "2")};
    CHECK(!ring_is_simple(bowtie));
    const std::vector<Point> degenerate = {pt("0", "0"), pt("1", "0"), pt("0", "0"), pt("1", "1")};
    CHECK(!ring_is_simple(degenerate));
}
