#include "udvg/render.hpp"

#include "udvg/visibility.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace udvg {

namespace {

constexpr double kScale = 100.0;  // pixels per unit
constexpr double kMargin = 60.0;  // pixel margin around the bounding box

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v + 0.0);  // avoid "-0.00"
    if (std::string(buf) == "-0.00") return "0.00";
    return buf;
}

struct Mapper {
    double min_x = 0, max_y = 0, margin = kMargin;
    double x(const Point& p) const { return (p.x.to_double() - min_x) * kScale + margin; }
    double y(const Point& p) const { return (max_y - p.y.to_double()) * kScale + margin; }
};

void emit_line(std::ostringstream& out, const Mapper& m, const char* cls,
               const Point& a, const Point& b) {
    out << "  <line class=\"" << cls << "\" x1=\"" << num(m.x(a)) << "\" y1=\""
        << num(m.y(a)) << "\" x2=\"" << num(m.x(b)) << "\" y2=\"" << num(m.y(b))
        << "\"/>\n";
}

}  // namespace

std::string render_svg(const Scene& scene, const RenderOptions& opts) {
    const std::vector<Point> verts = scene.all_vertices();

    double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const double x = verts[i].x.to_double(), y = verts[i].y.to_double();
        if (i == 0) {
            min_x = max_x = x;
            min_y = max_y = y;
        } else {
            min_x = std::min(min_x, x);
            max_x = std::max(max_x, x);
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y);
        }
    }
    const double margin = kMargin + (opts.disks ? kScale / 2 : 0.0);
    const Mapper m{min_x, max_y, margin};
    const double width = (max_x - min_x) * kScale + 2 * margin;
    const double height = (max_y - min_y) * kScale + 2 * margin;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
        << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << " "
        << num(height) << "\">\n";
    out << "  <style>.obstacle{stroke:#222;stroke-width:3;stroke-linecap:round}"
           ".edge{stroke:#2a7;stroke-width:1}"
           ".vertex{fill:#c33}"
           ".disk{fill:none;stroke:#bbd;stroke-width:1}</style>\n";

    if (opts.disks)
        for (const Point& p : verts)
            out << "  <circle class=\"disk\" cx=\"" << num(m.x(p)) << "\" cy=\""
                << num(m.y(p)) << "\" r=\"" << num(kScale / 2) << "\"/>\n";

    if (opts.edges) {
        const Graph g = build_udvg(scene, ThresholdPolicy::Closed);
        for (const auto& [u, v] : g.edges) emit_line(out, m, "edge", verts[u], verts[v]);
    }

    switch (scene.kind) {
        case SceneKind::Points:
            break;
        case SceneKind::Segments:
            for (const Segment& s : scene.segments) emit_line(out, m, "obstacle", s.a, s.b);
            break;
        case SceneKind::Polygon: {
            std::vector<const Ring*> rings;
            rings.push_back(&scene.outer);
            for (const Ring& h : scene.holes) rings.push_back(&h);
            for (const Ring* r : rings)
                for (std::size_t i = 0; i < r->size(); ++i)
                    emit_line(out, m, "obstacle", (*r)[i], (*r)[(i + 1) % r->size()]);
            break;
        }
    }

    for (const Point& p : verts)
        out << "  <circle class=\"vertex\" cx=\"" << num(m.x(p)) << "\" cy=\""
            << num(m.y(p)) << "\" r=\"4.00\"/>\n";

    out << "</svg>\n";
    return out.str();
}

}  // namespace udvg
