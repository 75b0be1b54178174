#include "udvg/jsonio.hpp"

#include <fstream>
#include <sstream>

namespace udvg::io {

namespace {

Json point_to_json(const Point& p) { return Json::array({p.x.str(), p.y.str()}); }

Rational coord_from_json(const Json& j) {
    if (j.is_string()) {
        auto r = Rational::try_parse(j.get<std::string>());
        if (!r) throw ParseError("bad coordinate: " + j.get<std::string>());
        return *r;
    }
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("coordinate must be a string or integer");
}

Point point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("point must be [x, y]");
    return Point{coord_from_json(j[0]), coord_from_json(j[1])};
}

Json ring_to_json(const std::vector<Point>& ring) {
    Json out = Json::array();
    for (const auto& p : ring) out.push_back(point_to_json(p));
    return out;
}

std::vector<Point> ring_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("ring must be an array of points");
    std::vector<Point> out;
    for (const auto& p : j) out.push_back(point_from_json(p));
    return out;
}

}  // namespace

Json scene_to_json(const Scene& scene) {
    Json j;
    j["version"] = "1";
    switch (scene.kind) {
        case SceneKind::Points: {
            j["kind"] = "points";
            j["points"] = ring_to_json(scene.points);
            break;
        }
        case SceneKind::Segments: {
            j["kind"] = "segments";
            Json segs = Json::array();
            for (const auto& s : scene.segments)
                segs.push_back(Json::array({point_to_json(s.a), point_to_json(s.b)}));
            j["segments"] = segs;
            break;
        }
        case SceneKind::Polygon: {
            j["kind"] = "polygon";
            Json poly;
            poly["outer"] = ring_to_json(scene.outer);
            Json holes = Json::array();
            for (const auto& h : scene.holes) holes.push_back(ring_to_json(h));
            poly["holes"] = holes;
            j["polygon"] = poly;
            break;
        }
    }
    return j;
}

Scene scene_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("scene must be an object");
    if (!j.contains("version") || j["version"] != "1")
        throw ParseError("unsupported scene version");
    if (!j.contains("kind") || !j["kind"].is_string()) throw ParseError("missing scene kind");
    const std::string kind = j["kind"].get<std::string>();
    Scene s;
    if (kind == "points") {
        s.kind = SceneKind::Points;
        if (!j.contains("points")) throw ParseError("points scene missing \"points\"");
        s.points = ring_from_json(j["points"]);
    } else if (kind == "segments") {
        s.kind = SceneKind::Segments;
        if (!j.contains("segments")) throw ParseError("segments scene missing \"segments\"");
        if (!j["segments"].is_array()) throw ParseError("\"segments\" must be an array");
        for (const auto& seg : j["segments"]) {
            if (!seg.is_array() || seg.size() != 2)
                throw ParseError("segment must be [[x,y],[x,y]]");
            s.segments.push_back({point_from_json(seg[0]), point_from_json(seg[1])});
        }
    } else if (kind == "polygon") {
        s.kind = SceneKind::Polygon;
        if (!j.contains("polygon") || !j["polygon"].is_object())
            throw ParseError("polygon scene missing \"polygon\"");
        const auto& poly = j["polygon"];
        if (!poly.contains("outer")) throw ParseError("polygon missing \"outer\"");
        s.outer = ring_from_json(poly["outer"]);
        if (poly.contains("holes"))
            for (const auto& h : poly["holes"]) s.holes.push_back(ring_from_json(h));
    } else {
        throw ParseError("unknown scene kind: " + kind);
    }
    return s;
}

Json graph_to_json(const Graph& g) {
    Json j;
    j["n"] = g.n;
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges) edges.push_back(Json::array({u, v}));
    j["edges"] = edges;
    Json labels = Json::array();
    for (const auto& l : g.labels) labels.push_back(l);
    j["labels"] = labels;
    return j;
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("graph must have \"n\" and \"edges\"");
    if (!j["n"].is_number_unsigned() && !j["n"].is_number_integer())
        throw ParseError("\"n\" must be an integer");
    const long long n = j["n"].get<long long>();
    if (n < 0) throw ParseError("\"n\" must be nonnegative");
    Graph g(static_cast<std::size_t>(n));
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw ParseError("edge must be [u, v]");
        const long long u = e[0].get<long long>();
        const long long v = e[1].get<long long>();
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw ParseError("edge endpoint out of range");
        g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }
    if (j.contains("labels")) {
        for (const auto& l : j["labels"]) g.labels.push_back(l.get<std::string>());
        if (!g.labels.empty() && g.labels.size() != g.n)
            throw ParseError("labels size mismatch");
    }
    g.finalize();
    return g;
}

Json coloring_to_json(const Coloring& c) {
    Json j = Json::array();
    for (auto v : c) j.push_back(static_cast<int>(v));
    return j;
}

Coloring coloring_from_json(const Json& j, std::size_t expected_n) {
    if (!j.is_array()) throw ParseError("coloring must be an array");
    if (j.size() != expected_n) throw ParseError("coloring size mismatch");
    Coloring c;
    for (const auto& v : j) {
        const long long x = v.get<long long>();
        if (x < 0 || x > 2) throw ParseError("color out of range");
        c.push_back(static_cast<std::uint8_t>(x));
    }
    return c;
}

Precoloring precoloring_from_json(const Json& j, std::size_t n) {
    if (!j.is_object()) throw ParseError("precoloring must be an object");
    Precoloring pre(n, -1);
    for (const auto& [key, val] : j.items()) {
        std::size_t idx = 0;
        try {
            idx = std::stoul(key);
        } catch (...) {
            throw ParseError("precoloring key must be a vertex index");
        }
        if (idx >= n) throw ParseError("precoloring vertex out of range");
        const long long c = val.get<long long>();
        if (c < 0 || c > 2) throw ParseError("precoloring color out of range");
        pre[idx] = static_cast<std::int8_t>(c);
    }
    return pre;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
}

void write_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << dump(j);
}

Graph graph_from_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long long n = -1, m = -1;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok == "c") continue;
        if (tok == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 0 || m < 0)
                throw ParseError("bad header; expected 'p edge <n> <m>'");
        } else if (tok == "e") {
            long long u, v;
            if (!(ls >> u >> v)) throw ParseError("bad edge line: " + line);
            if (n < 0) throw ParseError("edge before header");
            if (u < 1 || v < 1 || u > n || v > n || u == v)
                throw ParseError("edge endpoint out of range: " + line);
            edges.emplace_back(static_cast<std::size_t>(u - 1),
                               static_cast<std::size_t>(v - 1));
        } else {
            throw ParseError("unrecognized line: " + line);
        }
    }
    if (n < 0) throw ParseError("missing 'p edge' header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("edge count does not match header");
    Graph g(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    g.finalize();
    return g;
}

}  // namespace udvg::io
