#include "udvg/reduce_sat.hpp"

#include "udvg/gadgets.hpp"
#include "udvg/geometry.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

// Layout of a compiled scene (all coordinates in unit-disk units):
//
//   * The spine is a vertical triangle strip at x ~ 0; the vertices at
//     y = -12i (one per variable row) sit at strip positions = 0 mod 3, so
//     they all receive one shared "neutral" color.
//   * Each variable i owns the horizontal row y = -12i.  A small junction
//     triangle hangs the row off the spine and leaves the two non-neutral
//     colors as the variable's value; the row then runs rightwards as a
//     triangle strip, transferring the value with period 3.
//   * Clause lanes are vertical columns (pitch 11.75, three lanes per clause
//     plus one empty lane of separation).  Where a lane meets the row of its
//     own variable, the row carries an "anchor" vertex; the tap drops from
//     the anchor down the lane to the clause gadget at the bottom.
//   * Where a tap must pass a lower row, the 18-vertex crossing gadget is
//     spliced into that row; the gadget transfers the row value left-to-right
//     (a -> r) and the tap value top-to-bottom (h -> o) independently.
//   * A clause gadget is a rigid triangle (x', y', z') with three pendant
//     receivers (x, y, z); it is 3-colorable iff the three received values
//     are not all equal.
//
// Strips are built from two kinds of pieces:
//   * runs: evenly spaced vertices along a straight line, alternating between
//     the line and a 0.2 offset, with step h in [0.35, 0.47] so consecutive
//     and 2-apart vertices are adjacent while 3-apart ones are not;
//   * reset steps: a fixed 4-point template (head, +0.7, +0.9 with 0.2 offset,
//     +1.35) that restarts the position counter at a value-carrying vertex
//     and lets the strip turn corners without creating stray adjacencies.
//
// Every intended adjacency is recorded while emitting; the returned
// certificate carries that planned graph so tests can require the scene's
// actual unit disk visibility graph to match it edge-for-edge.

namespace udvg {
namespace {

constexpr double kRowPitch = 12.0;    // vertical distance between variable rows
constexpr double kLanePitch = 11.75;  // horizontal distance between clause lanes
constexpr double kLane0 = 9.7;        // column of the first lane
constexpr double kClausePitch = 4 * kLanePitch;  // three lanes + one empty
constexpr double kHMin = 0.35, kHMax = 0.47;     // run step bounds

struct P2 {
    double x, y;
};
P2 operator+(P2 a, P2 b) { return {a.x + b.x, a.y + b.y}; }
P2 operator-(P2 a, P2 b) { return {a.x - b.x, a.y - b.y}; }
P2 operator*(double s, P2 a) { return {s * a.x, s * a.y}; }
double norm(P2 a) { return std::sqrt(a.x * a.x + a.y * a.y); }
P2 rot90(P2 a) { return {-a.y, a.x}; }

// Emits scene vertices; consecutive emissions within a region pair up into
// segments, so regions between fixed multi-segment blocks must have even size.
struct Emitter {
    Scene scene;
    std::vector<std::pair<std::size_t, std::size_t>> planned;
    bool has_pending = false;
    Point buffered;

    std::size_t push(const Point& p) {
        std::size_t idx = 2 * scene.segments.size() + (has_pending ? 1 : 0);
        if (!has_pending) {
            buffered = p;
            has_pending = true;
        } else {
            scene.segments.push_back({buffered, p});
            has_pending = false;
        }
        return idx;
    }
    static Point snap(P2 p, long den) {
        return Point{Rational(std::lround(p.x * den), den),
                     Rational(std::lround(p.y * den), den)};
    }
    // Template vertices live on the 1/20 grid (their tight distance margins
    // are exact); run vertices are snapped to the 1/160 grid, which keeps the
    // 0.2 offsets and 0.45 flat-run steps exact as well.
    std::size_t coarse(P2 p) { return push(snap(p, 20)); }
    std::size_t fine(P2 p) { return push(snap(p, 160)); }
    void edge(std::size_t u, std::size_t v) { planned.emplace_back(u, v); }
};

// Rolling pair of strip indices: each added vertex is planned adjacent to the
// previous two, which is exactly the triangle-strip adjacency pattern.
struct Chain {
    long long i1 = -1, i2 = -1;
    void seed(std::size_t a) {
        i1 = static_cast<long long>(a);
        i2 = -1;
    }
    std::size_t add(Emitter& em, std::size_t idx) {
        if (i1 >= 0) em.edge(static_cast<std::size_t>(i1), idx);
        if (i2 >= 0) em.edge(static_cast<std::size_t>(i2), idx);
        i2 = i1;
        i1 = static_cast<long long>(idx);
        return idx;
    }
};

// Current strip head: an on-line vertex and its position mod 3 (position 0
// mod 3 carries the transferred value).
struct Head {
    P2 p;
    std::size_t idx;
    int m3;
};

// Even step count k = kres (mod 6) with d/k within the step bounds.
int straight_k(double d, int kres) {
    for (int k = 2; k <= 600; k += 2)
        if (k % 6 == kres && d >= kHMin * k - 1e-9 && d <= kHMax * k + 1e-9) return k;
    return 0;
}

// Residue (mod 6) a run's step count must have so that an on-line head at
// position h3 (mod 3) reaches an on-line target at position t3 (mod 3).
int kres_for(int h3, int t3) {
    static const int tab[3] = {0, 4, 2};
    return tab[((t3 - h3) % 3 + 3) % 3];
}

// Straight run from the head (exclusive) to tgt (inclusive, template grid);
// odd steps are offset 0.2 to `side` (relative to rot90 of the direction).
void run(Emitter& em, Chain& ch, Head& st, P2 tgt, int t3, double side) {
    double d = norm(tgt - st.p);
    int k = straight_k(d, kres_for(st.m3, t3));
    if (k == 0) throw std::logic_error("reduce_sat: no feasible run length");
    P2 dir = (1.0 / d) * (tgt - st.p);
    P2 off = (0.2 * side) * rot90(dir);
    std::size_t idx = 0;
    for (int j = 1; j < k; ++j) {
        P2 base = st.p + (d * j / k) * dir;
        if (j % 2 == 1) base = base + off;
        idx = ch.add(em, em.fine(base));
    }
    idx = ch.add(em, em.coarse(tgt));
    st = Head{tgt, idx, t3};
}

// Reset-step template from the head X (which must carry the value, i.e. be at
// position 0 mod 3): X1 = X + 0.7 dir, X2 = X + 0.9 dir + 0.2 pside perp,
// X3 = X + 1.35 dir.  The chain is reseeded at X so upstream vertices gain no
// edges into the template; X3 again carries the value.
std::array<std::size_t, 3> reset_step(Emitter& em, Chain& ch, Head& st, P2 dir,
                                      double pside) {
    assert(st.m3 == 0);
    P2 q = rot90(dir);
    ch.seed(st.idx);
    std::size_t x1 = ch.add(em, em.coarse(st.p + 0.7 * dir));
    std::size_t x2 = ch.add(em, em.coarse(st.p + 0.9 * dir + (0.2 * pside) * q));
    std::size_t x3 = ch.add(em, em.coarse(st.p + 1.35 * dir));
    st = Head{st.p + 1.35 * dir, x3, 0};
    return {x1, x2, x3};
}

struct Lane {
    std::size_t var = 0;
    std::size_t clause = 0;
    int slot = 0;  // 0 = left pad, 1 = middle pad, 2 = right pad
    double col = 0;
};

enum class FeatKind { Anchor, Cross };
struct Feature {
    double col;
    FeatKind kind;
    std::size_t lane;
};

}  // namespace

std::pair<Scene, ReductionCertificate> compile_nae3sat(const Formula& f) {
    f.validate();
    const std::size_t n = f.num_vars, m = f.clauses.size();

    // ---- lane assignment: per clause, slots ordered by variable descending
    // (so a tap lane is never immediately right of a crossing on its own row).
    std::vector<Lane> lanes(3 * m);
    for (std::size_t c = 0; c < m; ++c) {
        std::array<std::uint32_t, 3> vs = f.clauses[c];
        std::sort(vs.begin(), vs.end(), std::greater<>());
        for (int s = 0; s < 3; ++s)
            lanes[3 * c + s] = Lane{vs[s], c, s, kLane0 + kClausePitch * c + kLanePitch * s};
    }

    // ---- crossing fixpoint: a lane crosses every row below its own variable
    // that extends (rightwards from the spine) at least to the lane's column.
    std::vector<std::vector<std::size_t>> anchors_of(n), crossings_of(n);
    for (std::size_t l = 0; l < lanes.size(); ++l) anchors_of[lanes[l].var].push_back(l);
    std::vector<double> extent(n, 4.75);  // junction + turn + tail only
    auto feature_extent = [&](std::size_t j) {
        double e = 4.75;
        for (std::size_t l : anchors_of[j]) e = std::max(e, lanes[l].col + 2.9);
        for (std::size_t l : crossings_of[j]) e = std::max(e, lanes[l].col + 4.55);
        return e;
    };
    for (std::size_t j = 0; j < n; ++j) extent[j] = feature_extent(j);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t j = 1; j < n; ++j) {
            std::vector<std::size_t> cs;
            for (std::size_t l = 0; l < lanes.size(); ++l)
                if (lanes[l].var < j && lanes[l].col < extent[j] + 1.9) cs.push_back(l);
            if (cs != crossings_of[j]) {
                crossings_of[j] = std::move(cs);
                extent[j] = feature_extent(j);
                changed = true;
            }
        }
    }

    Emitter em;
    em.scene.kind = SceneKind::Segments;
    ReductionCertificate cert;

    // ---- spine: two staggered columns of unit segments; the vertex at
    // (0, -12i) is at strip position 24i = 0 mod 3 for every variable row.
    const std::size_t span = 6 * (n > 0 ? n - 1 : 0) + 1;
    std::vector<std::size_t> sigma(std::max<std::size_t>(n, 1), 0);
    {
        std::vector<std::pair<long, std::size_t>> pos;  // (strip position, index)
        for (std::size_t s = 0; s < span; ++s) {
            double y = -2.0 * s;
            pos.emplace_back(4 * s, em.coarse({0.0, y}));
            pos.emplace_back(4 * s + 2, em.coarse({0.0, y - 1.0}));
            pos.emplace_back(4 * s + 1, em.coarse({-0.2, y - 0.5}));
            pos.emplace_back(4 * s + 3, em.coarse({-0.2, y - 1.5}));
        }
        std::sort(pos.begin(), pos.end());
        for (std::size_t a = 0; a < pos.size(); ++a)
            for (std::size_t b = a + 1; b < pos.size() && pos[b].first - pos[a].first <= 2; ++b)
                em.edge(pos[a].second, pos[b].second);
    }
    // The vertex at (0, -12i) is the first emission of spine cell s = 6i.
    for (std::size_t i = 0; i < n; ++i) sigma[i] = 4 * (6 * i);
    assert(!em.has_pending);
    cert.neutral_anchor = sigma.empty() ? 0 : sigma[0];

    const GadgetFixture xg = crossing_gadget_segments();
    const Graph xg_ref = crossing_gadget_graph();
    const std::size_t gA = xg.anchors.at("a"), gR = xg.anchors.at("r");
    const std::size_t gH = xg.anchors.at("h"), gO = xg.anchors.at("o");

    std::vector<std::size_t> anchor_idx(lanes.size(), 0), leave_x1(lanes.size(), 0);
    // (lane, row) -> (h index, o index) of the spliced crossing gadget.
    std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> splice;

    // ---- variable rows
    for (std::size_t i = 0; i < n; ++i) {
        const double ys = -kRowPitch * static_cast<double>(i);
        std::vector<Feature> feats;
        for (std::size_t l : anchors_of[i]) feats.push_back({lanes[l].col, FeatKind::Anchor, l});
        for (std::size_t l : crossings_of[i]) feats.push_back({lanes[l].col, FeatKind::Cross, l});
        std::sort(feats.begin(), feats.end(),
                  [](const Feature& a, const Feature& b) { return a.col < b.col; });

        Chain ch;
        ch.seed(sigma[i]);
        std::size_t w1 = ch.add(em, em.coarse({0.85, ys + 0.3}));
        ch.add(em, em.coarse({0.95, ys}));
        ch.add(em, em.coarse({1.3, ys + 0.2}));
        std::size_t w3 = ch.add(em, em.coarse({1.85, ys}));
        cert.variable_anchor[i] = w1;
        Head st{{1.85, ys}, w3, 0};
        reset_step(em, ch, st, {1, 0}, +1);  // head now at (3.2, ys)

        for (const Feature& ft : feats) {
            const double col = ft.col;
            if (ft.kind == FeatKind::Anchor) {
                run(em, ch, st, {col - 4.05, ys}, 0, +1);
                reset_step(em, ch, st, {1, 0}, +1);
                run(em, ch, st, {col, ys}, 0, +1);  // flat 2.7, step 0.45
                anchor_idx[ft.lane] = st.idx;
                auto lv = reset_step(em, ch, st, {1, 0}, +1);
                leave_x1[ft.lane] = lv[0];
            } else {
                run(em, ch, st, {col - 2.3, ys}, 1, +1);  // pre2
                std::size_t pre2 = st.idx;
                std::size_t pre1 = ch.add(em, em.coarse({col - 1.85, ys + 0.2}));
                assert(!em.has_pending);
                const std::size_t base = 2 * em.scene.segments.size();
                const Rational dx(std::lround((col - 1.4) * 20), 20);
                const Rational dy(std::lround((ys - 2.1) * 20), 20);
                for (const Segment& sg : xg.scene.segments) {
                    em.push(Point{sg.a.x + dx, sg.a.y + dy});
                    em.push(Point{sg.b.x + dx, sg.b.y + dy});
                }
                for (auto [u, v] : xg_ref.edges) em.edge(base + u, base + v);
                em.edge(pre2, base + gA);
                em.edge(pre1, base + gA);
                cert.crossing_registry.push_back(
                    {base + gA, base + gR, base + gH, base + gO});
                splice[{ft.lane, i}] = {base + gH, base + gO};
                ch.seed(base + gR);  // r = (col+1.7, ys-0.7)
                std::size_t t0 = ch.add(em, em.coarse({col + 2.15, ys - 0.5}));
                em.edge(base + 16, t0);  // q is just within reach of t0
                ch.add(em, em.coarse({col + 2.55, ys - 0.7}));
                std::size_t t2 = ch.add(em, em.coarse({col + 3.0, ys - 0.7}));
                st = Head{{col + 3.0, ys - 0.7}, t2, 0};
            }
        }
        for (int t = 1; t <= 3; ++t)  // tail pins the strip's final triangle
            ch.add(em, em.coarse({st.p.x + 0.45 * t, st.p.y + (t % 2 ? 0.2 : 0.0)}));
        assert(!em.has_pending);
    }

    // ---- clause gadgets
    const double cy = -kRowPitch * static_cast<double>(n > 0 ? n - 1 : 0) - 12.0;
    const double ybus = cy + 4.65;
    std::vector<std::array<std::size_t, 3>> pads(m);
    for (std::size_t c = 0; c < m; ++c) {
        const double ccx = kLane0 + kClausePitch * c + kLanePitch;
        std::size_t xp = em.coarse({ccx - 0.5, cy});
        std::size_t xr = em.coarse({ccx - 1.25, cy + 0.55});
        std::size_t yp = em.coarse({ccx, cy + 0.15});
        std::size_t yr = em.coarse({ccx, cy + 1.05});
        std::size_t zp = em.coarse({ccx + 0.5, cy});
        std::size_t zr = em.coarse({ccx + 1.25, cy + 0.55});
        em.edge(xp, yp);
        em.edge(xp, zp);
        em.edge(yp, zp);
        em.edge(xp, xr);
        em.edge(yp, yr);
        em.edge(zp, zr);
        cert.clause_anchor.push_back({xp, yp, zp});
        pads[c] = {xr, yr, zr};
    }
    assert(!em.has_pending);

    // ---- taps: drop each lane's value from its anchor to its clause pad
    for (std::size_t l = 0; l < lanes.size(); ++l) {
        const Lane& ln = lanes[l];
        const double col = ln.col;
        const double ys = -kRowPitch * static_cast<double>(ln.var);
        const double ccx = kLane0 + kClausePitch * ln.clause + kLanePitch;
        const double d = ln.slot == 0 ? +1.0 : ln.slot == 2 ? -1.0 : 0.0;
        const double pside = ln.slot == 0 ? -1.0 : +1.0;
        const double padx = ccx + 1.25 * (ln.slot - 1);
        const double pady = cy + (ln.slot == 1 ? 1.05 : 0.55);

        Chain ch;
        ch.seed(anchor_idx[l]);
        std::size_t tx1 = ch.add(em, em.coarse({col, ys - 0.7}));
        em.edge(leave_x1[l], tx1);  // dist^2 = 0.98: forces the two branches apart
        ch.add(em, em.coarse({col - 0.2, ys - 0.9}));
        std::size_t tx3 = ch.add(em, em.coarse({col, ys - 1.35}));
        Head st{{col, ys - 1.35}, tx3, 0};

        for (std::size_t j = ln.var + 1; j < n; ++j) {
            auto it = splice.find({l, j});
            if (it == splice.end()) continue;
            const double ysj = -kRowPitch * static_cast<double>(j);
            run(em, ch, st, {col, ysj + 2.2}, 1, -1);  // E0, above the gadget
            std::size_t e0 = st.idx;
            std::size_t de = ch.add(em, em.coarse({col - 0.2, ysj + 1.75}));
            em.edge(e0, it->second.first);
            em.edge(de, it->second.first);
            assert(!em.has_pending);
            ch.seed(it->second.second);  // o = (col+0.6, ysj-2.1)
            ch.add(em, em.coarse({col + 0.6, ysj - 2.8}));
            ch.add(em, em.coarse({col + 0.8, ysj - 3.0}));
            std::size_t ex3 = ch.add(em, em.coarse({col + 0.6, ysj - 3.45}));
            st = Head{{col + 0.6, ysj - 3.45}, ex3, 0};
        }

        if (ln.slot == 1) {
            run(em, ch, st, {padx, pady + 0.9}, 1, -1);  // straight to E1
        } else {
            // corner down to the bus row, run sideways above the clause, and
            // corner down again onto the pad column
            run(em, ch, st, {col, ybus + 1.35}, 0, -1);
            auto r1 = reset_step(em, ch, st, {0, -1}, -d);
            auto r2 = reset_step(em, ch, st, {d, 0}, d);
            em.edge(r1[0], r2[0]);  // dist^2 = 0.9125: forces the corner rigid
            run(em, ch, st, {padx - 1.35 * d, ybus}, 0, d);
            auto r3 = reset_step(em, ch, st, {d, 0}, d);
            auto r4 = reset_step(em, ch, st, {0, -1}, pside);
            em.edge(r3[0], r4[0]);
            run(em, ch, st, {padx, pady + 0.9}, 1, pside);  // E1, 1.85
        }
        std::size_t e1 = st.idx;
        // keep t2 off the descent line so the E1 strip triangle is not collinear
        const double tside = ln.slot == 1 ? -1.0 : pside;
        std::size_t t2 = ch.add(em, em.coarse({padx + 0.2 * tside, pady + 0.45}));
        std::size_t pad = pads[ln.clause][ln.slot];
        em.edge(t2, pad);
        em.edge(e1, pad);
        assert(!em.has_pending);
    }

    cert.planned.n = em.scene.vertex_count();
    for (auto [u, v] : em.planned) cert.planned.add_edge(u, v);
    cert.planned.finalize();
    return {std::move(em.scene), std::move(cert)};
}

Assignment decode_assignment(const Formula& f, const ReductionCertificate& cert,
                             const Coloring& coloring) {
    if (coloring.size() != cert.planned.n)
        throw CorruptWitness("decode_assignment: coloring size mismatch");
    const std::uint8_t neutral = coloring.at(cert.neutral_anchor);
    if (neutral > 2) throw CorruptWitness("decode_assignment: invalid color value");
    const std::uint8_t true_color = neutral == 0 ? 1 : 0;
    Assignment a(f.num_vars, false);
    for (std::size_t i = 0; i < f.num_vars; ++i) {
        const std::uint8_t c = coloring.at(cert.variable_anchor.at(i));
        if (c == neutral)
            throw CorruptWitness("decode_assignment: variable anchor carries the neutral color");
        a[i] = (c == true_color);
    }
    return a;
}

}  // namespace udvg
