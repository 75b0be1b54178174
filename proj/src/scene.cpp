#include "udvg/scene.hpp"

#include <stdexcept>

namespace udvg {

std::size_t Scene::vertex_count() const {
    switch (kind) {
        case SceneKind::Points: return points.size();
        case SceneKind::Segments: return 2 * segments.size();
        case SceneKind::Polygon: {
            std::size_t n = outer.size();
            for (const Ring& h : holes) n += h.size();
            return n;
        }
    }
    return 0;
}

Point Scene::vertex(std::size_t i) const {
    switch (kind) {
        case SceneKind::Points: return points.at(i);
        case SceneKind::Segments: {
            const Segment& s = segments.at(i / 2);
            return (i % 2 == 0) ? s.a : s.b;
        }
        case SceneKind::Polygon: {
            if (i < outer.size()) return outer[i];
            std::size_t k = i - outer.size();
            for (const Ring& h : holes) {
                if (k < h.size()) return h[k];
                k -= h.size();
            }
            break;
        }
    }
    throw std::out_of_range("Scene::vertex");
}

std::vector<Point> Scene::all_vertices() const {
    std::vector<Point> v;
    v.reserve(vertex_count());
    for (std::size_t i = 0; i < vertex_count(); ++i) v.push_back(vertex(i));
    return v;
}

std::vector<std::string> Scene::validate() const {
    std::vector<std::string> errs;
    if (vertex_count() == 0) errs.push_back("scene is empty");
    switch (kind) {
        case SceneKind::Points: {
            for (std::size_t i = 0; i < points.size(); ++i)
                for (std::size_t j = i + 1; j < points.size(); ++j)
                    if (points[i] == points[j])
                        errs.push_back("duplicate point at indices " + std::to_string(i) +
                                       " and " + std::to_string(j));
            break;
        }
        case SceneKind::Segments: {
            for (std::size_t i = 0; i < segments.size(); ++i) {
                if (segments[i].a == segments[i].b)
                    errs.push_back("segment " + std::to_string(i) + " is degenerate");
            }
            for (std::size_t i = 0; i < segments.size(); ++i) {
                for (std::size_t j = i + 1; j < segments.size(); ++j) {
                    if (segment_boxes_disjoint(segments[i].a, segments[i].b,
                                               segments[j].a, segments[j].b))
                        continue;
                    SegIntersection si =
                        segments_intersect(segments[i].a, segments[i].b,
                                           segments[j].a, segments[j].b);
                    if (si.kind != SegIntersectKind::Empty)
                        errs.push_back("segments " + std::to_string(i) + " and " +
                                       std::to_string(j) + " are not disjoint");
                }
            }
            break;
        }
        case SceneKind::Polygon: {
            if (outer.size() < 3) errs.push_back("outer ring has fewer than 3 vertices");
            if (!ring_is_simple(outer)) errs.push_back("outer ring is not simple");
            for (std::size_t h = 0; h < holes.size(); ++h) {
                if (!ring_is_simple(holes[h])) {
                    errs.push_back("hole " + std::to_string(h) + " is not simple");
                    continue;
                }
                for (const Point& p : holes[h])
                    if (point_in_ring(p, outer) != PointLocation::StrictInterior)
                        errs.push_back("hole " + std::to_string(h) +
                                       " is not strictly inside the outer ring");
            }
            // Holes pairwise disjoint (edges may not touch or cross).
            for (std::size_t h1 = 0; h1 < holes.size(); ++h1) {
                for (std::size_t h2 = h1 + 1; h2 < holes.size(); ++h2) {
                    bool bad = false;
                    for (std::size_t i = 0; i < holes[h1].size() && !bad; ++i)
                        for (std::size_t j = 0; j < holes[h2].size() && !bad; ++j) {
                            const Point& a1 = holes[h1][i];
                            const Point& b1 = holes[h1][(i + 1) % holes[h1].size()];
                            const Point& a2 = holes[h2][j];
                            const Point& b2 = holes[h2][(j + 1) % holes[h2].size()];
                            if (segment_boxes_disjoint(a1, b1, a2, b2)) continue;
                            SegIntersection si = segments_intersect(a1, b1, a2, b2);
                            if (si.kind != SegIntersectKind::Empty) bad = true;
                        }
                    if (bad)
                        errs.push_back("holes " + std::to_string(h1) + " and " +
                                       std::to_string(h2) + " intersect");
                }
            }
            break;
        }
    }
    return errs;
}

void Scene::validate_or_throw() const {
    const auto errs = validate();
    if (errs.empty()) return;
    std::string msg = "invalid scene:";
    for (const auto& e : errs) msg += "\n  " + e;
    throw std::invalid_argument(msg);
}

}  // namespace udvg
