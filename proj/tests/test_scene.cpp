#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "udvg/scene.hpp"

using namespace udvg;

namespace {
Point pt(const char* x, const char* y) { return {Rational::parse(x), Rational::parse(y)}; }
}  // namespace

TEST_CASE("vertex indexing: points") {
    Scene s;
    s.kind = SceneKind::Points;
    s.points = {pt("0", "0"), pt("1", "0"), pt("2", "0")};
    CHECK(s.vertex_count() == 3);
    CHECK(s.vertex(1) == pt("1", "0"));
    s.validate_or_throw();
}

TEST_CASE("vertex indexing: segment i owns vertices 2i and 2i+1") {
    Scene s;
    s.kind = SceneKind::Segments;
    s.segments = {{pt("0", "0"), pt("1", "0")}, {pt("0", "2"), pt("1", "2")}};
    CHECK(s.vertex_count() == 4);
    CHECK(s.vertex(0) == pt("0", "0"));
    CHECK(s.vertex(1) == pt("1", "0"));
    CHECK(s.vertex(2) == pt("0", "2"));
    CHECK(s.vertex(3) == pt("1", "2"));
    s.validate_or_throw();
}

TEST_CASE("vertex indexing: polygon lists outer ring then holes") {
    Scene s;
    s.kind = SceneKind::Polygon;
    s.outer = {pt("0", "0"), pt("10", "0"), pt("10", "10"), pt("0", "10")};
    s.holes = {{pt("4", "4"), pt("4", "6"), pt("6", "6"), pt("6", "4")}};
    CHECK(s.vertex_count() == 8);
    CHECK(s.vertex(3) == pt("0", "10"));
    CHECK(s.vertex(4) == pt("4", "4"));
    s.validate_or_throw();
}

TEST_CASE("validation rejects duplicate points") {
    Scene s;
    s.kind = SceneKind::Points;
    s.points = {pt("0", "0"), pt("0", "0")};
    CHECK_THROWS(s.validate_or_throw());
}

TEST_CASE("validation rejects touching or crossing segments") {
    Scene s;
    s.kind = SceneKind::Segments;
    s.segments = {{pt("0", "0"), pt("2", "0")}, {pt("1", "0"), pt("1", "1")}};
    CHECK_THROWS(s.validate_or_throw());
    s.segments = {{pt("0", "0"), pt("2", "2")}, {pt("0", "2"), pt("2", "0")}};
    CHECK_THROWS(s.validate_or_throw());
    s.segments = {{pt("0", "0"), pt("0", "0")}, {pt("1", "1"), pt("2", "2")}};
    CHECK_THROWS(s.validate_or_throw());  // degenerate segment
}

TEST_CASE("validation rejects bad polygons") {
    Scene s;
    s.kind = SceneKind::Polygon;
    s.outer = {pt("0", "0"), pt("2", "2"), pt("2", "0"), pt("0", "2")};  // bowtie
    CHECK_THROWS(s.validate_or_throw());

    s.outer = {pt("0", "0"), pt("10", "0"), pt("10", "10"), pt("0", "10")};
    s.holes = {{pt("8", "8"), pt("8", "12"), pt("12", "12"), pt("12", "8")}};  // sticks out
    CHECK_THROWS(s.validate_or_throw());

    s.holes = {{pt("1", "1"), pt("3", "1"), pt("3", "3"), pt("1", "3")},
               {pt("2", "2"), pt("4", "2"), pt("4", "4"), pt("2", "4")}};  // overlapping holes
    CHECK_THROWS(s.validate_or_throw());
}

TEST_CASE("empty scenes are rejected") {
    Scene s;
    s.kind = SceneKind::Points;
    CHECK_THROWS(s.validate_or_throw());
}
