#include "udvg/geometry.hpp"

#include <algorithm>

namespace udvg {

int orientation(const Point& a, const Point& b, const Point& c) {
    Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return cross.sign();
}

Rational sq_dist(const Point& a, const Point& b) {
    Rational dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

bool within_unit(const Point& a, const Point& b, ThresholdPolicy policy) {
    switch (policy) {
        case ThresholdPolicy::Unbounded: return true;
        case ThresholdPolicy::Closed: return sq_dist(a, b) <= Rational(1);
        case ThresholdPolicy::Strict: return sq_dist(a, b) < Rational(1);
    }
    return false;
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
    if (orientation(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool strictly_inside_segment(const Point& p, const Point& a, const Point& b) {
    return on_segment(p, a, b) && p != a && p != b;
}

namespace {

// Parameter of p along the dominant axis of segment [a,b]; assumes collinear.
Rational collinear_param(const Point& p, const Point& a, const Point& b) {
    Rational dx = b.x - a.x, dy = b.y - a.y;
    if (abs(dx) >= abs(dy)) return (p.x - a.x) / dx;
    return (p.y - a.y) / dy;
}

Point lerp(const Point& a, const Point& b, const Rational& t) {
    return Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

// Padded double bounding box of a segment; a screen for the exact predicates.
// Two segments whose screened boxes are disjoint provably do not intersect
// (rational-to-double conversion errs by far less than the padding).
struct Box {
    double xlo, xhi, ylo, yhi;
    Box(const Point& a, const Point& b) {
        constexpr double pad = 1e-9;
        const double ax = a.x.to_double(), ay = a.y.to_double();
        const double bx = b.x.to_double(), by = b.y.to_double();
        xlo = std::min(ax, bx) - pad;
        xhi = std::max(ax, bx) + pad;
        ylo = std::min(ay, by) - pad;
        yhi = std::max(ay, by) + pad;
    }
    bool disjoint(const Box& o) const {
        return xhi < o.xlo || o.xhi < xlo || yhi < o.ylo || o.yhi < ylo;
    }
    bool excludes(double px, double py) const {
        return px < xlo || px > xhi || py < ylo || py > yhi;
    }
};

}  // namespace

SegIntersection segments_intersect(const Point& p1, const Point& p2,
                                   const Point& q1, const Point& q2) {
    SegIntersection out;

    // Degenerate (zero-length) segments reduce to point-on-segment tests.
    if (p1 == p2 && q1 == q2) {
        if (p1 == q1) { out.kind = SegIntersectKind::PointTouch; out.point = p1; }
        return out;
    }
    if (p1 == p2) {
        if (on_segment(p1, q1, q2)) { out.kind = SegIntersectKind::PointTouch; out.point = p1; }
        return out;
    }
    if (q1 == q2) {
        if (on_segment(q1, p1, p2)) { out.kind = SegIntersectKind::PointTouch; out.point = q1; }
        return out;
    }

    int d1 = orientation(q1, q2, p1);
    int d2 = orientation(q1, q2, p2);
    int d3 = orientation(p1, p2, q1);
    int d4 = orientation(p1, p2, q2);

    if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
        // Same supporting line: intersect parameter intervals along [p1,p2].
        Rational t1 = collinear_param(q1, p1, p2);
        Rational t2 = collinear_param(q2, p1, p2);
        if (t1 > t2) std::swap(t1, t2);
        Rational lo = std::max(t1, Rational(0));
        Rational hi = std::min(t2, Rational(1));
        if (lo > hi) return out;  // Empty
        if (lo == hi) {
            out.kind = SegIntersectKind::PointTouch;
            out.point = lerp(p1, p2, lo);
            return out;
        }
        out.kind = SegIntersectKind::CollinearOverlap;
        out.overlap_a = lerp(p1, p2, lo);
        out.overlap_b = lerp(p1, p2, hi);
        return out;
    }

    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
        // Interior of both segments: exact crossing point.
        Rational denom = (p2.x - p1.x) * (q2.y - q1.y) - (p2.y - p1.y) * (q2.x - q1.x);
        Rational numer = (q1.x - p1.x) * (q2.y - q1.y) - (q1.y - p1.y) * (q2.x - q1.x);
        Rational t = numer / denom;
        out.kind = SegIntersectKind::ProperCross;
        out.point = lerp(p1, p2, t);
        return out;
    }

    // Touch cases: one endpoint on the other segment.
    if (d1 == 0 && on_segment(p1, q1, q2)) { out.kind = SegIntersectKind::PointTouch; out.point = p1; return out; }
    if (d2 == 0 && on_segment(p2, q1, q2)) { out.kind = SegIntersectKind::PointTouch; out.point = p2; return out; }
    if (d3 == 0 && on_segment(q1, p1, p2)) { out.kind = SegIntersectKind::PointTouch; out.point = q1; return out; }
    if (d4 == 0 && on_segment(q2, p1, p2)) { out.kind = SegIntersectKind::PointTouch; out.point = q2; return out; }
    return out;
}

bool segment_boxes_disjoint(const Point& a, const Point& b, const Point& c,
                            const Point& d) {
    return Box(a, b).disjoint(Box(c, d));
}

PointLocation point_in_ring(const Point& p, const Ring& ring) {
    const std::size_t n = ring.size();
    const double px = p.x.to_double(), py = p.y.to_double();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        if (Box(a, b).excludes(px, py)) continue;
        if (on_segment(p, a, b)) return PointLocation::OnBoundary;
    }
    // Even-odd crossing count of the horizontal ray to +x; boundary is already
    // excluded, so strict comparisons are safe and exact.
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        if ((a.y > p.y) != (b.y > p.y)) {
            Rational xint = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (xint > p.x) inside = !inside;
        }
    }
    return inside ? PointLocation::StrictInterior : PointLocation::Exterior;
}

PointLocation point_in_polygon(const Point& p, const Ring& outer,
                               const std::vector<Ring>& holes) {
    PointLocation lo = point_in_ring(p, outer);
    if (lo == PointLocation::OnBoundary) return PointLocation::OnBoundary;
    if (lo == PointLocation::Exterior) return PointLocation::Exterior;
    for (const Ring& h : holes) {
        PointLocation lh = point_in_ring(p, h);
        if (lh == PointLocation::OnBoundary) return PointLocation::OnBoundary;
        if (lh == PointLocation::StrictInterior) return PointLocation::Exterior;
    }
    return PointLocation::StrictInterior;
}

Rational signed_area2(const Ring& ring) {
    Rational acc(0);
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        acc += a.x * b.y - b.x * a.y;
    }
    return acc;
}

bool ring_is_simple(const Ring& ring) {
    const std::size_t n = ring.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (ring[i] == ring[j]) return false;
    std::vector<Box> boxes;
    boxes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) boxes.emplace_back(ring[i], ring[(i + 1) % n]);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (!adjacent && boxes[i].disjoint(boxes[j])) continue;
            SegIntersection si = segments_intersect(ring[i], ring[(i + 1) % n],
                                                    ring[j], ring[(j + 1) % n]);
            if (adjacent) {
                // Consecutive edges may only share their common vertex.
                if (si.kind != SegIntersectKind::PointTouch) return false;
            } else if (si.kind != SegIntersectKind::Empty) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace udvg
