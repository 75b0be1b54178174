// Compares the OpenMP UDVG construction against the serial reference on the
// bundled reduction outputs and a synthetic random point cloud, and checks
// that both produce identical graphs.

#include "udvg/formula.hpp"
#include "udvg/graph.hpp"
#include "udvg/reduce_sat.hpp"
#include "udvg/scene.hpp"
#include "udvg/visibility.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <utility>
#include <vector>

using namespace udvg;

namespace {

template <typename F>
double time_of(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

Scene random_points(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> coord(-4000, 4000);
    Scene s;
    s.kind = SceneKind::Points;
    while (s.points.size() < n) {
        Point p{Rational(coord(rng), 100), Rational(coord(rng), 100)};
        bool dup = false;
        for (const Point& q : s.points) dup = dup || q == p;
        if (!dup) s.points.push_back(p);
    }
    return s;
}

void bench(const std::string& name, const Scene& scene) {
    Graph parallel, serial;
    const double tp = time_of([&] { parallel = build_udvg(scene, ThresholdPolicy::Closed); });
    const double ts =
        time_of([&] { serial = build_udvg_serial(scene, ThresholdPolicy::Closed); });
    const bool same = graphs_equal(parallel, serial);
    std::printf("%-28s %6zu verts %7zu edges  parallel %7.3fs  serial %7.3fs  %s\n",
                name.c_str(), scene.vertex_count(), parallel.edge_count(), tp, ts,
                same ? "identical" : "MISMATCH");
    if (!same) std::exit(1);
}

}  // namespace

int main() {
    Formula f;
    f.num_vars = 4;
    f.clauses = {{0, 2, 3}, {0, 1, 3}, {1, 2, 3}};
    bench("nae3sat reduction output", compile_nae3sat(f).first);

    bench("random points n=300", random_points(300, 1));
    bench("random points n=800", random_points(800, 2));
    return 0;
}
