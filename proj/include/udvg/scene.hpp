#pragma once

// Scene model: point scenes, segment scenes, and polygons with holes.
//
// Vertex indexing is part of the contract:
//   - points:   vertex i = points[i]
//   - segments: segment i contributes vertices 2i (its a-end) and 2i+1 (b-end)
//   - polygon:  outer ring vertices in order, then each hole's vertices in order

#include "udvg/geometry.hpp"

#include <string>
#include <vector>

namespace udvg {

enum class SceneKind { Points, Segments, Polygon };

struct Scene {
    SceneKind kind = SceneKind::Points;

    std::vector<Point> points;       // Points scenes
    std::vector<Segment> segments;   // Segments scenes
    Ring outer;                      // Polygon scenes
    std::vector<Ring> holes;

    std::size_t vertex_count() const;
    // Flattened vertex by contract index.
    Point vertex(std::size_t i) const;
    std::vector<Point> all_vertices() const;

    // Empty vector when the scene is well-formed; otherwise human-readable
    // problems (duplicate points, touching segments, non-simple rings, ...).
    std::vector<std::string> validate() const;
    // Throws std::invalid_argument listing every problem found.
    void validate_or_throw() const;
};

}  // namespace udvg
