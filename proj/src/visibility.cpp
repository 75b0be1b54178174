#include "udvg/visibility.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace udvg {

namespace {

// Uniform grid over obstacle segments.  Coordinates are bucketed with padded
// doubles so every exact intersection is found in some gathered cell; the
// predicates themselves stay exact.
constexpr double kPad = 1e-6;

struct Grid {
    double cell = 1.0;
    std::unordered_map<std::int64_t, std::vector<int>> cells;

    static std::int64_t key(std::int64_t ix, std::int64_t iy) {
        return (ix << 32) ^ (iy & 0xffffffffll);
    }

    void insert_bbox(int id, double x0, double y0, double x1, double y1) {
        const auto ix0 = static_cast<std::int64_t>(std::floor((x0 - kPad) / cell));
        const auto ix1 = static_cast<std::int64_t>(std::floor((x1 + kPad) / cell));
        const auto iy0 = static_cast<std::int64_t>(std::floor((y0 - kPad) / cell));
        const auto iy1 = static_cast<std::int64_t>(std::floor((y1 + kPad) / cell));
        for (std::int64_t ix = ix0; ix <= ix1; ++ix)
            for (std::int64_t iy = iy0; iy <= iy1; ++iy) cells[key(ix, iy)].push_back(id);
    }

    template <typename F>
    void gather_bbox(double x0, double y0, double x1, double y1, F&& visit) const {
        const auto ix0 = static_cast<std::int64_t>(std::floor((x0 - kPad) / cell));
        const auto ix1 = static_cast<std::int64_t>(std::floor((x1 + kPad) / cell));
        const auto iy0 = static_cast<std::int64_t>(std::floor((y0 - kPad) / cell));
        const auto iy1 = static_cast<std::int64_t>(std::floor((y1 + kPad) / cell));
        for (std::int64_t ix = ix0; ix <= ix1; ++ix)
            for (std::int64_t iy = iy0; iy <= iy1; ++iy) {
                auto it = cells.find(key(ix, iy));
                if (it == cells.end()) continue;
                for (int id : it->second) visit(id);
            }
    }

    // Cells covered by the rightward horizontal ray from (x,y).
    template <typename F>
    void gather_ray(double x, double y, double xmax, F&& visit) const {
        gather_bbox(x, y, xmax, y, std::forward<F>(visit));
    }
};

// Parameter of collinear point p along segment ab, as an exact rational in
// [0, 1].  Uses the dominant axis.
Rational segment_param(const Point& p, const Point& a, const Point& b) {
    const Rational dx = abs(b.x - a.x), dy = abs(b.y - a.y);
    if (dx >= dy) {
        return (p.x - a.x) / (b.x - a.x);
    }
    return (p.y - a.y) / (b.y - a.y);
}

}  // namespace

struct SceneIndex::Impl {
    const Scene* scene;
    SceneKind kind;
    std::vector<Point> verts;
    std::vector<double> vx, vy;  // rounded coordinates, for bucketing only

    // Obstacle segments: scene segments, or polygon boundary edges.
    std::vector<Segment> obstacles;
    std::vector<double> ox0, oy0, ox1, oy1;
    Grid grid;
    double scene_xmax = 0.0;

    // Per-thread visited stamps for grid gathering without duplicates.
    mutable std::vector<std::vector<std::uint32_t>> stamps;
    mutable std::vector<std::uint32_t> epochs;

    explicit Impl(const Scene& s) : scene(&s), kind(s.kind) {
        verts = s.all_vertices();
        vx.reserve(verts.size());
        vy.reserve(verts.size());
        for (const auto& p : verts) {
            vx.push_back(p.x.to_double());
            vy.push_back(p.y.to_double());
        }
        if (kind == SceneKind::Segments) {
            obstacles = s.segments;
        } else if (kind == SceneKind::Polygon) {
            auto add_ring = [&](const std::vector<Point>& ring) {
                for (std::size_t i = 0; i < ring.size(); ++i)
                    obstacles.push_back({ring[i], ring[(i + 1) % ring.size()]});
            };
            add_ring(s.outer);
            for (const auto& h : s.holes) add_ring(h);
        }
        for (std::size_t i = 0; i < obstacles.size(); ++i) {
            const double ax = obstacles[i].a.x.to_double(), ay = obstacles[i].a.y.to_double();
            const double bx = obstacles[i].b.x.to_double(), by = obstacles[i].b.y.to_double();
            ox0.push_back(std::min(ax, bx));
            oy0.push_back(std::min(ay, by));
            ox1.push_back(std::max(ax, bx));
            oy1.push_back(std::max(ay, by));
            grid.insert_bbox(static_cast<int>(i), ox0[i], oy0[i], ox1[i], oy1[i]);
        }
        for (double x : vx) scene_xmax = std::max(scene_xmax, x);
        for (double x : ox1) scene_xmax = std::max(scene_xmax, x);

        int nthreads = 1;
#ifdef _OPENMP
        nthreads = omp_get_max_threads();
#endif
        stamps.assign(nthreads, std::vector<std::uint32_t>(obstacles.size(), 0));
        epochs.assign(nthreads, 0);
    }

    int thread_id() const {
#ifdef _OPENMP
        return omp_get_thread_num();
#else
        return 0;
#endif
    }

    // Gather obstacle ids whose padded bbox meets the padded bbox of uv,
    // deduplicated, into out.
    void candidates(std::size_t u, std::size_t v, std::vector<int>& out) const {
        out.clear();
        const int tid = thread_id();
        auto& stamp = stamps[tid];
        const std::uint32_t epoch = ++epochs[tid];
        grid.gather_bbox(std::min(vx[u], vx[v]), std::min(vy[u], vy[v]),
                         std::max(vx[u], vx[v]), std::max(vy[u], vy[v]), [&](int id) {
                             if (stamp[id] == epoch) return;
                             stamp[id] = epoch;
                             out.push_back(id);
                         });
    }

    bool visible_points(std::size_t u, std::size_t v) const {
        const Point& U = verts[u];
        const Point& V = verts[v];
        for (std::size_t w = 0; w < verts.size(); ++w) {
            if (w == u || w == v) continue;
            if (strictly_inside_segment(verts[w], U, V)) return false;
        }
        return true;
    }

    bool visible_segments(std::size_t u, std::size_t v, std::vector<int>& scratch) const {
        const Point& U = verts[u];
        const Point& V = verts[v];
        // Endpoints of one input segment always see each other.
        if (v == u + 1 && u % 2 == 0) return true;
        candidates(u, v, scratch);
        for (int id : scratch) {
            const Segment& s = obstacles[static_cast<std::size_t>(id)];
            const SegIntersection si = segments_intersect(U, V, s.a, s.b);
            switch (si.kind) {
                case SegIntersectKind::Empty:
                    break;
                case SegIntersectKind::PointTouch:
                    if (*si.point != U && *si.point != V) return false;
                    break;
                case SegIntersectKind::ProperCross:
                case SegIntersectKind::CollinearOverlap:
                    return false;
            }
        }
        return true;
    }

    PointLocation classify_grid(const Point& p) const {
        const double px = p.x.to_double(), py = p.y.to_double();
        const int tid = thread_id();
        auto& stamp = stamps[tid];

        // Boundary test against locally bucketed edges.
        {
            const std::uint32_t epoch = ++epochs[tid];
            bool on = false;
            grid.gather_bbox(px, py, px, py, [&](int id) {
                if (stamp[id] == epoch || on) return;
                stamp[id] = epoch;
                const auto& s = obstacles[static_cast<std::size_t>(id)];
                if (on_segment(p, s.a, s.b)) on = true;
            });
            if (on) return PointLocation::OnBoundary;
        }

        // Even-odd rule: parity of exact crossings of the rightward ray with
        // all boundary edges (outer ring and holes together).
        const std::uint32_t epoch = ++epochs[tid];
        int crossings = 0;
        grid.gather_ray(px, py, scene_xmax, [&](int id) {
            if (stamp[id] == epoch) return;
            stamp[id] = epoch;
            const auto& s = obstacles[static_cast<std::size_t>(id)];
            const bool above_a = s.a.y > p.y;
            const bool above_b = s.b.y > p.y;
            if (above_a == above_b) return;
            // Edge straddles the ray's line; crossing is to the right of p
            // iff the orientation test agrees with the edge's direction.
            const int o = orientation(s.a, s.b, p);
            if ((above_b && o > 0) || (above_a && o < 0)) ++crossings;
        });
        return (crossings % 2 == 1) ? PointLocation::StrictInterior : PointLocation::Exterior;
    }

    bool visible_polygon(std::size_t u, std::size_t v, std::vector<int>& scratch,
                         std::vector<Rational>& params) const {
        const Point& U = verts[u];
        const Point& V = verts[v];
        candidates(u, v, scratch);
        params.clear();
        params.push_back(Rational(0));
        params.push_back(Rational(1));
        for (int id : scratch) {
            const Segment& s = obstacles[static_cast<std::size_t>(id)];
            const SegIntersection si = segments_intersect(U, V, s.a, s.b);
            switch (si.kind) {
                case SegIntersectKind::Empty:
                    break;
                case SegIntersectKind::ProperCross:
                    return false;
                case SegIntersectKind::PointTouch:
                    params.push_back(segment_param(*si.point, U, V));
                    break;
                case SegIntersectKind::CollinearOverlap:
                    params.push_back(segment_param(*si.overlap_a, U, V));
                    params.push_back(segment_param(*si.overlap_b, U, V));
                    break;
            }
        }
        std::sort(params.begin(), params.end());
        params.erase(std::unique(params.begin(), params.end()), params.end());
        for (std::size_t k = 0; k + 1 < params.size(); ++k) {
            const Rational t = (params[k] + params[k + 1]) / Rational(2);
            const Point mid{U.x + t * (V.x - U.x), U.y + t * (V.y - U.y)};
            if (classify_grid(mid) == PointLocation::Exterior) return false;
        }
        return true;
    }

    bool visible(std::size_t u, std::size_t v, std::vector<int>& scratch,
                 std::vector<Rational>& params) const {
        if (u > v) std::swap(u, v);
        switch (kind) {
            case SceneKind::Points:
                return visible_points(u, v);
            case SceneKind::Segments:
                return visible_segments(u, v, scratch);
            case SceneKind::Polygon:
                return visible_polygon(u, v, scratch, params);
        }
        return false;
    }
};

SceneIndex::SceneIndex(const Scene& scene) : impl_(std::make_unique<Impl>(scene)) {}
SceneIndex::~SceneIndex() = default;
SceneIndex::SceneIndex(SceneIndex&&) noexcept = default;

const std::vector<Point>& SceneIndex::vertices() const { return impl_->verts; }

bool SceneIndex::visible(std::size_t i, std::size_t j) const {
    std::vector<int> scratch;
    std::vector<Rational> params;
    return impl_->visible(i, j, scratch, params);
}

PointLocation SceneIndex::classify(const Point& p) const {
    if (impl_->kind != SceneKind::Polygon)
        throw std::logic_error("classify: polygon scenes only");
    return impl_->classify_grid(p);
}

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> threshold_pairs(SceneIndex::Impl& ix,
                                                                     ThresholdPolicy policy) {
    const auto n = ix.verts.size();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    const Rational one(1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (policy != ThresholdPolicy::Unbounded) {
                // Cheap double prefilter; exact check confirms near the cut.
                const double dx = ix.vx[i] - ix.vx[j];
                const double dy = ix.vy[i] - ix.vy[j];
                if (dx * dx + dy * dy > 1.0 + 1e-9) continue;
                if (!within_unit(ix.verts[i], ix.verts[j], policy)) continue;
            }
            pairs.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
        }
    }
    return pairs;
}

}  // namespace

Graph detail_build_udvg(const Scene& scene, ThresholdPolicy policy, bool parallel) {
    scene.validate_or_throw();
    SceneIndex index(scene);
    SceneIndex::Impl* impl = index.impl_.get();

    const auto pairs = threshold_pairs(*impl, policy);
    std::vector<char> keep(pairs.size(), 0);

    if (parallel) {
#pragma omp parallel
        {
            std::vector<int> scratch;
            std::vector<Rational> params;
#pragma omp for schedule(dynamic, 64)
            for (long k = 0; k < static_cast<long>(pairs.size()); ++k) {
                const auto kk = static_cast<std::size_t>(k);
                keep[kk] = impl->visible(pairs[kk].first, pairs[kk].second, scratch, params);
            }
        }
    } else {
        std::vector<int> scratch;
        std::vector<Rational> params;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            keep[k] = impl->visible(pairs[k].first, pairs[k].second, scratch, params);
    }

    Graph g(impl->verts.size());
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if (keep[k]) g.add_edge(pairs[k].first, pairs[k].second);
    g.finalize();
    return g;
}

Graph build_udvg(const Scene& scene, ThresholdPolicy policy) {
    return detail_build_udvg(scene, policy, true);
}

Graph build_udvg_serial(const Scene& scene, ThresholdPolicy policy) {
    return detail_build_udvg(scene, policy, false);
}

}  // namespace udvg
