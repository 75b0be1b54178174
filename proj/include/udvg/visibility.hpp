#pragma once

// Unit disk visibility graph construction.
//
// Semantics per scene kind:
//   - points:   w blocks (u,v) iff w lies strictly inside the open segment uv.
//   - segments: segments are closed opaque obstacles.  uv is visible iff uv is
//     an input segment, or no segment meets uv at any point other than u, v.
//     Collinear overlap with another segment blocks.
//   - polygon:  closed-region convention.  uv must not properly cross any
//     boundary edge; subdividing uv at all boundary touch points, every
//     open sub-interval midpoint must be StrictInterior or OnBoundary.
//
// An edge exists iff the pair is visible AND within the distance threshold.
//
// build_udvg (OpenMP over candidate pairs) and build_udvg_serial (reference)
// produce identical graphs; tests assert this.

#include "udvg/graph.hpp"
#include "udvg/scene.hpp"

#include <memory>

namespace udvg {

// Spatial index and exact visibility oracle for one scene.  Grid buckets are
// computed with conservatively padded doubles; all decisions are exact.
class SceneIndex {
public:
    explicit SceneIndex(const Scene& scene);
    ~SceneIndex();
    SceneIndex(SceneIndex&&) noexcept;

    const std::vector<Point>& vertices() const;

    // Visibility between flattened vertex indices, ignoring the threshold.
    bool visible(std::size_t i, std::size_t j) const;

    // Exact polygon point classification (polygon scenes only).
    PointLocation classify(const Point& p) const;

    struct Impl;

private:
    std::unique_ptr<Impl> impl_;
    friend Graph detail_build_udvg(const Scene&, ThresholdPolicy, bool parallel);
};

Graph build_udvg(const Scene& scene, ThresholdPolicy policy);
Graph build_udvg_serial(const Scene& scene, ThresholdPolicy policy);

}  // namespace udvg
