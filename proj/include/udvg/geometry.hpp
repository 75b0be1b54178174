#pragma once

// Exact geometric predicates over rational points.  Every classification here
// is decided by integer/rational sign computations; there is no epsilon.

#include "udvg/rational.hpp"

#include <optional>
#include <vector>

namespace udvg {

struct Point {
    Rational x, y;

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

struct Segment {
    Point a, b;
};

// Sign of the cross product (b-a) x (c-a): +1 counter-clockwise, 0 collinear,
// -1 clockwise.
int orientation(const Point& a, const Point& b, const Point& c);

// Squared Euclidean distance, exact.
Rational sq_dist(const Point& a, const Point& b);

enum class ThresholdPolicy { Closed, Strict, Unbounded };

// Unit-disk test under the given policy (threshold is squared distance 1).
bool within_unit(const Point& a, const Point& b, ThresholdPolicy policy);

// True iff p lies on the closed segment [a,b].
bool on_segment(const Point& p, const Point& a, const Point& b);
// True iff p lies strictly inside the open segment (a,b).
bool strictly_inside_segment(const Point& p, const Point& a, const Point& b);

// Classification of the intersection of two closed segments.
enum class SegIntersectKind {
    Empty,            // disjoint
    PointTouch,       // exactly one common point, at least one endpoint involved
    ProperCross,      // one common point interior to both segments
    CollinearOverlap  // a shared sub-segment of positive length
};

struct SegIntersection {
    SegIntersectKind kind = SegIntersectKind::Empty;
    // Set for PointTouch and ProperCross.
    std::optional<Point> point;
    // Set for CollinearOverlap: the endpoints of the shared sub-segment.
    std::optional<Point> overlap_a, overlap_b;
};

SegIntersection segments_intersect(const Point& p1, const Point& p2,
                                   const Point& q1, const Point& q2);

// Point-in-polygon classification for a polygon with holes.  `outer` is a
// simple ring; `holes` are simple rings strictly inside it.  Ring vertex order
// does not matter for the classification.
enum class PointLocation { StrictInterior, OnBoundary, Exterior };

using Ring = std::vector<Point>;

// Conservative screen: true only when the padded double-precision bounding
// boxes of segments ab and cd are disjoint, which proves the exact
// intersection is empty.  False means "must check exactly".
bool segment_boxes_disjoint(const Point& a, const Point& b, const Point& c,
                            const Point& d);

PointLocation point_in_ring(const Point& p, const Ring& ring);
PointLocation point_in_polygon(const Point& p, const Ring& outer,
                               const std::vector<Ring>& holes);

// Twice the signed area of a ring (positive for counter-clockwise).
Rational signed_area2(const Ring& ring);

// True iff the ring is simple: no repeated vertices, no two edges sharing a
// point except consecutive edges at their shared endpoint.
bool ring_is_simple(const Ring& ring);

}  // namespace udvg
