#include "udvg/gadgets.hpp"

#include <stdexcept>
#include <utility>

namespace udvg {

namespace {

Point pt(long xn, long xd, long yn, long yd) {
    return Point{Rational(xn, xd), Rational(yn, yd)};
}

Graph make_graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                 std::vector<std::string> labels = {}) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    g.finalize();
    g.labels = std::move(labels);
    return g;
}

}  // namespace

GadgetFixture long_edge_segments(int pairs) {
    if (pairs < 1) throw std::invalid_argument("long_edge_segments: pairs must be >= 1");
    const auto n = static_cast<std::size_t>(pairs);

    GadgetFixture fx;
    fx.name = "long_edge_segments";
    fx.scene.kind = SceneKind::Segments;
    // Row 0 segment s spans [2s, 2s+1] on y = 0; row 1 segment s spans
    // [2s+1/2, 2s+3/2] on y = 1/5.  Interleaved in the scene, so row 0
    // segment s is scene segment 2s (vertices 4s, 4s+1) and row 1 segment s
    // is scene segment 2s+1 (vertices 4s+2, 4s+3).
    for (std::size_t s = 0; s < n; ++s) {
        const long b = 2 * static_cast<long>(s);
        fx.scene.segments.push_back({pt(b, 1, 0, 1), pt(b + 1, 1, 0, 1)});
        fx.scene.segments.push_back({pt(2 * b + 1, 2, 1, 5), pt(2 * b + 3, 2, 1, 5)});
    }

    // Walked left to right the endpoints form a triangle strip: strip
    // position t is vertex sigma(t), and the strip edges are (t, t+1) and
    // (t, t+2).
    const auto sigma = [](std::size_t t) {
        static constexpr std::size_t off[4] = {0, 2, 1, 3};
        return 4 * (t / 4) + off[t % 4];
    };
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t t = 0; t + 1 < 4 * n; ++t) edges.emplace_back(sigma(t), sigma(t + 1));
    for (std::size_t t = 0; t + 2 < 4 * n; ++t) edges.emplace_back(sigma(t), sigma(t + 2));
    fx.reference = make_graph(4 * n, edges);

    for (std::size_t j = 0; j < 2 * n; ++j) {
        fx.anchors["row0[" + std::to_string(j) + "]"] = 4 * (j / 2) + j % 2;
        fx.anchors["row1[" + std::to_string(j) + "]"] = 4 * (j / 2) + 2 + j % 2;
    }
    return fx;
}

GadgetFixture clause_gadget() {
    GadgetFixture fx;
    fx.name = "clause";
    fx.scene.kind = SceneKind::Segments;
    // Inner endpoints x', y', z' are pairwise within the unit threshold and
    // form a triangle; outer endpoints x, y, z are pairwise far apart.
    fx.scene.segments = {
        {pt(-1, 2, 0, 1), pt(-5, 4, 11, 20)},  // x' -- x
        {pt(0, 1, 3, 20), pt(0, 1, 21, 20)},   // y' -- y
        {pt(1, 2, 0, 1), pt(5, 4, 11, 20)},    // z' -- z
    };
    fx.reference = make_graph(6, {{0, 2}, {0, 4}, {2, 4}, {0, 1}, {2, 3}, {4, 5}},
                              {"x'", "x", "y'", "y", "z'", "z"});
    fx.anchors = {{"x'", 0}, {"x", 1}, {"y'", 2}, {"y", 3}, {"z'", 4}, {"z", 5}};
    return fx;
}

Graph crossing_gadget_graph() {
    const auto ix = [](char c) { return static_cast<std::size_t>(c - 'a'); };
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const char* e : {"ab", "ac", "ad", "bg", "bh", "cd", "cn", "de", "df", "dg",
                          "ef", "ek", "en", "ei", "fg", "fi", "gh", "gi", "hj", "ij",
                          "il", "jl", "kl", "kn", "kp", "kq", "kr", "lq", "mp", "mo",
                          "mn", "np", "op", "qr"})
        edges.emplace_back(ix(e[0]), ix(e[1]));
    std::vector<std::string> labels;
    for (char c = 'a'; c <= 'r'; ++c) labels.emplace_back(1, c);
    return make_graph(18, edges, std::move(labels));
}

GadgetFixture crossing_gadget_segments() {
    GadgetFixture fx;
    fx.name = "crossing_segments";
    fx.scene.kind = SceneKind::Segments;
    // Segment list ab, cd, ef, gh, ij, kl, mn, op, qr; since the labels pair
    // consecutive letters, contract vertex index i is letter 'a' + i.
    const auto P = [](const char* x, const char* y) {
        return Point{Rational::parse(x), Rational::parse(y)};
    };
    fx.scene.segments = {
        {P("0", "2.1"), P("0.6", "2.9")},     // a  b
        {P("0.4", "1.3"), P("0.6", "1.7")},   // c  d
        {P("1.4", "1.5"), P("1.4", "2.1")},   // e  f
        {P("1.2", "2.5"), P("1.4", "3.4")},   // g  h
        {P("1.85", "2.15"), P("2.1", "3")},   // i  j
        {P("2.2", "1.2"), P("2.2", "2.2")},   // k  l
        {P("1.3", "0.4"), P("1.3", "0.9")},   // m  n
        {P("2", "0"), P("2", "0.6")},         // o  p
        {P("2.7", "1.4"), P("3.1", "1.4")},   // q  r
    };
    fx.reference = crossing_gadget_graph();
    fx.anchors = {{"a", 0}, {"r", 17}, {"h", 7}, {"o", 14}};
    return fx;
}

GadgetFixture corridor(int k) {
    if (k < 3 || k % 3 != 0)
        throw std::invalid_argument("corridor: k must be a positive multiple of 3");
    const long K = k;

    GadgetFixture fx;
    fx.name = "corridor_" + std::to_string(k);
    fx.scene.kind = SceneKind::Polygon;
    // Ring: u, a_1..a_k (top, y = 1/10), v, b_k..b_1 (bottom, y = -1/10).
    // Walked u, a_1, b_1, a_2, b_2, ..., a_k, b_k, v the vertices advance by
    // 9/20 horizontally while alternating rows, forming a triangle strip of
    // 2k+2 vertices inside a convex ribbon.
    fx.scene.outer.push_back(pt(-9, 20, -1, 10));                               // u
    for (long i = 1; i <= K; ++i) fx.scene.outer.push_back(pt(9 * (i - 1), 10, 1, 10));
    fx.scene.outer.push_back(pt(9 * K, 10, 1, 10));                             // v
    for (long i = K; i >= 1; --i)
        fx.scene.outer.push_back(pt(9 * (i - 1) * 2 + 9, 20, -1, 10));          // b_i

    const std::size_t u = 0, v = static_cast<std::size_t>(K) + 1;
    const auto a = [&](long i) { return static_cast<std::size_t>(i); };
    const auto b = [&](long i) { return static_cast<std::size_t>(2 * K + 2 - i); };

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < fx.scene.outer.size(); ++i)  // boundary
        edges.emplace_back(i, (i + 1) % fx.scene.outer.size());
    for (long i = 1; i <= K; ++i) edges.emplace_back(a(i), b(i));
    for (long i = 1; i < K; ++i) edges.emplace_back(b(i), a(i + 1));
    fx.reference = make_graph(fx.scene.outer.size(), edges);

    fx.anchors = {{"u", u}, {"v", v}};
    for (long i = 1; i <= K; ++i) {
        fx.anchors["a" + std::to_string(i)] = a(i);
        fx.anchors["b" + std::to_string(i)] = b(i);
    }
    return fx;
}

GadgetFixture chamber() {
    GadgetFixture fx;
    fx.name = "chamber";
    fx.scene.kind = SceneKind::Polygon;
    // Central vertex c1 at the origin; c2..c12 on the unit circle around it
    // except the three distance-7/5 vertices c4, c7, c10; four cap vertices
    // w* close the corridor mouths more than one unit from everything.
    const Point c1 = pt(0, 1, 0, 1);
    const Point c2 = pt(3, 5, -4, 5), c3 = pt(4, 5, -3, 5), c4 = pt(7, 5, 0, 1);
    const Point c5 = pt(4, 5, 3, 5), c6 = pt(3, 5, 4, 5), c7 = pt(0, 1, 7, 5);
    const Point c8 = pt(-3, 5, 4, 5), c9 = pt(-4, 5, 3, 5), c10 = pt(-7, 5, 0, 1);
    const Point c11 = pt(-4, 5, -3, 5), c12 = pt(-3, 5, -4, 5);
    const Point wse = pt(3, 2, -3, 2), wne = pt(3, 2, 3, 2);
    const Point wnw = pt(-3, 2, 3, 2), wsw = pt(-3, 2, -3, 2);
    fx.scene.outer = {c1, c2, wse, c3, c4, c5, wne, c6, c7, c8, wnw, c9, c10, c11, wsw, c12};

    // Reference adjacency frozen from a one-time visibility computation over
    // this polygon; the structural facts (center adjacent to exactly
    // c2,c3,c5,c6,c8,c9,c11,c12, caps isolated beyond the threshold) are
    // asserted independently in the tests.
    fx.reference = make_graph(
        16,
        {{0, 1},   {0, 3},   {0, 5},  {0, 7},  {0, 9},   {0, 11},  {0, 13},  {0, 15},  {1, 3},
         {3, 4},   {4, 5},   {5, 7},  {7, 8},  {8, 9},   {9, 11},  {11, 12}, {12, 13}, {13, 15}},
        {"c1", "c2", "wse", "c3", "c4", "c5", "wne", "c6", "c7", "c8", "wnw", "c9", "c10",
         "c11", "wsw", "c12"});
    fx.anchors = {{"center", 0}, {"c2", 1}, {"c3", 3}, {"c4", 4},  {"c5", 5},   {"c6", 7},
                  {"c7", 8},     {"c8", 9}, {"c9", 11}, {"c10", 12}, {"c11", 13}, {"c12", 15}};
    return fx;
}

GadgetFixture point_gadget(const std::string& name) {
    GadgetFixture fx;
    fx.scene.kind = SceneKind::Points;
    if (name == "long_edge") {
        fx.name = "point_long_edge";
        // Triangle strip of 12 points: step 9/20, rows y = 0 and y = 1/5.
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (long t = 0; t < 12; ++t) {
            fx.scene.points.push_back(pt(9 * t, 20, t % 2, 5));
            if (t >= 1) edges.emplace_back(t - 1, t);
            if (t >= 2) edges.emplace_back(t - 2, t);
        }
        fx.reference = make_graph(12, edges);
        fx.anchors = {{"first", 0}, {"last", 11}};
    } else if (name == "crossing") {
        fx.name = "point_crossing";
        const auto P = [](const char* x, const char* y) {
            return Point{Rational::parse(x), Rational::parse(y)};
        };
        fx.scene.points = {P("0", "1"),     P("0.25", "1.95"), P("0.6", "1"),
                           P("0", "0.2"),   P("1.2", "2.1"),   P("1.1", "1.7"),
                           P("1.4", "1"),   P("1.1", "0.4"),   P("0.9", "0"),
                           P("2.1", "1.8"), P("1.8", "1"),     P("1.9", "0"),
                           P("2.4", "0.85")};
        const auto ix = [](char c) { return static_cast<std::size_t>(c - 'a'); };
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (const char* e : {"ab", "ac", "ad", "be", "bf", "cd", "ch", "cg", "cf", "di",
                              "ef", "ej", "fg", "fk", "gh", "gk", "hi", "hl", "hk", "il",
                              "jk", "jm", "km", "lm"})
            edges.emplace_back(ix(e[0]), ix(e[1]));
        std::vector<std::string> labels;
        for (char c = 'a'; c <= 'm'; ++c) labels.emplace_back(1, c);
        fx.reference = make_graph(13, edges, std::move(labels));
        fx.anchors = {{"a", 0}, {"m", 12}, {"e", 4}, {"i", 8}};
    } else if (name == "clause") {
        fx.name = "point_clause";
        fx.scene.points = {pt(-1, 2, 0, 1), pt(0, 1, 3, 20),   pt(1, 2, 0, 1),
                           pt(-5, 4, 11, 20), pt(0, 1, 21, 20), pt(5, 4, 11, 20)};
        fx.reference = make_graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}},
                                  {"x'", "y'", "z'", "x", "y", "z"});
        fx.anchors = {{"x'", 0}, {"y'", 1}, {"z'", 2}, {"x", 3}, {"y", 4}, {"z", 5}};
    } else {
        throw std::invalid_argument("point_gadget: unknown name " + name);
    }
    return fx;
}

std::vector<GadgetFixture> k16_fixtures() {
    std::vector<GadgetFixture> out;

    {  // Points: 11 collinear points plus an apex that sees all of them.
        GadgetFixture fx;
        fx.name = "k16_points";
        fx.scene.kind = SceneKind::Points;
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (long i = 0; i <= 10; ++i) {
            fx.scene.points.push_back(pt(i, 10, 1, 5));
            if (i >= 1) edges.emplace_back(i - 1, i);
            edges.emplace_back(static_cast<std::size_t>(i), 11);
        }
        fx.scene.points.push_back(pt(1, 2, 0, 1));  // apex u
        fx.reference = make_graph(12, edges);
        fx.anchors["center"] = 11;
        for (std::size_t l = 0; l < 6; ++l) fx.anchors["leaf" + std::to_string(l)] = 2 * l;
        out.push_back(std::move(fx));
    }

    {  // Segments: a row of five short segments plus a vertical segment vu
       // below; v sees nine row endpoints, u sees only v.
        GadgetFixture fx;
        fx.name = "k16_segments";
        fx.scene.kind = SceneKind::Segments;
        for (long i = 0; i < 5; ++i)
            fx.scene.segments.push_back({pt(2 * i, 5, 0, 1), pt(2 * i + 1, 5, 0, 1)});
        fx.scene.segments.push_back({pt(4, 5, -3, 5), pt(4, 5, -8, 5)});  // v -- u
        const std::size_t v = 10, u = 11;
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t i = 0; i < 5; ++i) {
            edges.emplace_back(2 * i, 2 * i + 1);           // own segment
            if (i >= 1) edges.emplace_back(2 * i - 1, 2 * i);  // gap
            edges.emplace_back(v, 2 * i);                   // v sees every left end
            if (i < 4) edges.emplace_back(v, 2 * i + 1);    // and all but the last right end
        }
        edges.emplace_back(v, u);
        fx.reference = make_graph(12, edges);
        fx.anchors = {{"center", v}, {"leaf0", u}, {"leaf1", 0}, {"leaf2", 2},
                      {"leaf3", 4},  {"leaf4", 6}, {"leaf5", 8}};
        out.push_back(std::move(fx));
    }

    {  // Polygon: a comb with six teeth seen from a single deep vertex.
        GadgetFixture fx;
        fx.name = "k16_polygon";
        fx.scene.kind = SceneKind::Polygon;
        fx.scene.outer.push_back(pt(3, 5, -4, 5));  // u
        for (long i = 0; i <= 5; ++i) {
            fx.scene.outer.push_back(pt(6 * i, 25, 0, 1));  // tooth T_i
            if (i < 5) fx.scene.outer.push_back(pt(3 + 6 * i, 25, -1, 10));  // notch N_i
        }
        const auto T = [](std::size_t i) { return 1 + 2 * i; };
        const auto N = [](std::size_t i) { return 2 + 2 * i; };
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t i = 0; i < 12; ++i) edges.emplace_back(i, (i + 1) % 12);  // boundary
        for (std::size_t i = 1; i <= 4; ++i) edges.emplace_back(0, T(i));  // u sees every tooth
        for (std::size_t i = 0; i < 5; ++i) edges.emplace_back(0, N(i));   // and every notch
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = i + 1; j < 5; ++j) edges.emplace_back(N(i), N(j));
        fx.reference = make_graph(12, edges);
        fx.anchors["center"] = 0;
        for (std::size_t l = 0; l < 6; ++l) fx.anchors["leaf" + std::to_string(l)] = T(l);
        out.push_back(std::move(fx));
    }

    return out;
}

std::vector<GadgetFixture> all_fixtures() {
    std::vector<GadgetFixture> out;
    out.push_back(long_edge_segments(3));
    out.push_back(clause_gadget());
    out.push_back(crossing_gadget_segments());
    out.push_back(corridor(3));
    out.push_back(chamber());
    out.push_back(point_gadget("long_edge"));
    out.push_back(point_gadget("crossing"));
    out.push_back(point_gadget("clause"));
    for (auto& fx : k16_fixtures()) out.push_back(std::move(fx));
    return out;
}

}  // namespace udvg
