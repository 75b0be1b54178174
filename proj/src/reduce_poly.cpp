// Compiler from 4-regular planar graphs (with routed layouts) to polygons
// with holes, per reduce_poly.hpp.
//
// Layout lexicon.  Every input vertex becomes a "chamber": the 12-vertex
// star-shaped cavity from the gadget catalog, with four mouths opening along
// the diagonal compass directions; unused mouths are closed by distant cap
// vertices.  Every input edge becomes a "corridor": a ribbon of two walls
// carrying a rigid triangle strip between the two chamber centers.  Corridor
// centerlines are input polylines whose segments alternate diagonal and
// axis-parallel headings, turning 45 degrees at each waypoint; bends are
// realized by a fixed six-vertex corner template, and straight legs are
// filled with evenly spaced wall vertices.  Leg vertex counts are chosen so
// that every pair of strip vertices at distance <= 2 in strip order is within
// unit distance, every pair at distance 3..6 is beyond it, and the total
// strip length avoids the one residue mod 3 that would let the two centers
// share a color.  Corner templates shift the wall lines slightly, so the last
// corner of each route is anchored by solving an exact alignment equation
// instead of sitting at its waypoint.  The intended unit disk visibility
// graph of the whole emission is recorded in the certificate.

#include "udvg/reduce_poly.hpp"

#include "udvg/reduce_sat.hpp"  // CorruptWitness

#include "json.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace udvg {
namespace {

// ---------------------------------------------------------------------------
// Headings: 0=E, 1=NE, 2=N, 3=NW, 4=W, 5=SW, 6=S, 7=SE (ccw, 45 degrees).

const int kDirX[8] = {1, 1, 0, -1, -1, -1, 0, 1};
const int kDirY[8] = {0, 1, 1, 1, 0, -1, -1, -1};

bool diagonal(int h) { return h % 2 == 1; }

// Offset functional: constant along the heading (identifies the wall line).
Rational line_offset(int h, const Point& p) {
    switch (h % 4) {
        case 0: return p.y;         // E/W
        case 1: return p.y - p.x;   // NE/SW
        case 2: return p.x;         // N/S
        default: return p.y + p.x;  // NW/SE
    }
}

// Along functional: dot(p, dir), strictly increasing in the travel direction.
Rational along(int h, const Point& p) {
    return p.x * Rational(kDirX[h]) + p.y * Rational(kDirY[h]);
}

// Point on the line with direction h and the given offset, at along-value a.
Point wall_point(int h, const Rational& offset, const Rational& a) {
    switch (h % 4) {
        case 0: return Point{a * Rational(kDirX[h]), offset};
        case 2: return Point{offset, a * Rational(kDirY[h])};
        case 1: {  // offset = y - x, along = +-(x + y)
            const Rational s = a * Rational(kDirX[h]);
            return Point{(s - offset) / Rational(2), (s + offset) / Rational(2)};
        }
        default: {  // offset = y + x, along = +-(x - y)
            const Rational s = a * Rational(kDirX[h]);
            return Point{(s + offset) / Rational(2), (offset - s) / Rational(2)};
        }
    }
}

Rational dist2(const Point& a, const Point& b) {
    const Rational dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

// Snap a rational to the 1/320 grid (leg interpolation parameters only).
Rational snap320(const Rational& r) {
    const long n = std::lround(r.to_double() * 320.0);
    return Rational(n, 320);
}

Point rot90(const Point& p) { return Point{Rational(0) - p.y, p.x}; }

// ---------------------------------------------------------------------------
// Templates.  wall 0 = A (left of travel), wall 1 = B (right of travel).

struct TVert {
    Point p;
    int wall = 0;
};

// Canonical corner: travel E, turn left to NE.  Entry walls y = +-1/10,
// exit walls y - x = 3/20 (A) and y - x = -5/20 (B).
std::vector<TVert> canonical_corner() {
    auto P = [](long nx, long ny) { return Point{Rational(nx, 20), Rational(ny, 20)}; };
    return {
        {P(-19, 2), 0},   // (-0.95, 0.10)
        {P(-9, -2), 1},   // (-0.45, -0.10)
        {P(-1, 2), 0},    // inner bend (-0.05, 0.10)
        {P(3, -2), 1},    // outer bend (0.15, -0.10)
        {P(9, 12), 0},    // (0.45, 0.60)
        {P(17, 12), 1},   // (0.85, 0.60)
    };
}

// Corner template for headings hin -> hout (hout = hin +- 1 mod 8), as a
// rotation / mirror / reversal of the canonical corner.
std::vector<TVert> corner_template(int hin, int hout) {
    for (int rev = 0; rev < 2; ++rev) {
        for (int mir = 0; mir < 2; ++mir) {
            for (int k = 0; k < 4; ++k) {
                int a = 0, b = 1;
                if (rev) { a = 5; b = 4; }
                if (mir) { a = (8 - a) % 8; b = (8 - b) % 8; }
                a = (a + 2 * k) % 8;
                b = (b + 2 * k) % 8;
                if (a != hin || b != hout) continue;
                std::vector<TVert> vs = canonical_corner();
                if (rev) {
                    std::reverse(vs.begin(), vs.end());
                    for (auto& v : vs) v.wall ^= 1;
                }
                if (mir) {
                    for (auto& v : vs) {
                        v.p.y = Rational(0) - v.p.y;
                        v.wall ^= 1;
                    }
                }
                for (auto& v : vs)
                    for (int i = 0; i < k; ++i) v.p = rot90(v.p);
                return vs;
            }
        }
    }
    throw CrossingLayout("corridor bend is not a 45 degree turn");
}

// Chamber offsets, matching the gadget catalog chamber.
struct ChamberShape {
    std::array<Point, 12> c;   // c[0] = center, c[1..11] = c2..c12
    std::array<Point, 4> cap;  // caps for mouth slots SE, NE, NW, SW
};

ChamberShape chamber_shape() {
    auto P = [](long nx, long ny) { return Point{Rational(nx, 5), Rational(ny, 5)}; };
    auto Cp = [](long nx, long ny) { return Point{Rational(nx, 2), Rational(ny, 2)}; };
    ChamberShape s;
    s.c = {Point{Rational(0), Rational(0)},
           P(3, -4), P(4, -3), P(7, 0),  P(4, 3),  P(3, 4),
           P(0, 7),  P(-3, 4), P(-4, 3), P(-7, 0), P(-4, -3), P(-3, -4)};
    s.cap = {Cp(3, -3), Cp(3, 3), Cp(-3, 3), Cp(-3, -3)};
    return s;
}

// Mouth flank indices into ChamberShape.c per diagonal heading;
// A = left of outbound travel, B = right.
void mouth_flanks(int h, int& ia, int& ib) {
    switch (h) {
        case 7: ia = 2; ib = 1; return;   // SE: A=c3, B=c2
        case 1: ia = 5; ib = 4; return;   // NE: A=c6, B=c5
        case 3: ia = 8; ib = 7; return;   // NW: A=c9, B=c8
        case 5: ia = 11; ib = 10; return; // SW: A=c12, B=c11
        default: throw CrossingLayout("corridor must leave a chamber diagonally");
    }
}

int mouth_cap_slot(int h) {
    switch (h) {
        case 7: return 0;
        case 1: return 1;
        case 3: return 2;
        case 5: return 3;
        default: return -1;
    }
}

// Mouth template beyond the flanks, canonical NE orientation:
// a2 = flankA + (0.45, 0.45), b2 = flankB + (0.69, 0.69), a3 = a2 + (0.35, 0.35).
std::vector<TVert> mouth_extension(int h, const Point& flank_a, const Point& flank_b) {
    Point da{Rational(9, 20), Rational(9, 20)};
    Point db{Rational(69, 100), Rational(69, 100)};
    Point dc{Rational(7, 20), Rational(7, 20)};
    const int k = ((h - 1) / 2) % 4;  // quarter turns from NE
    for (int i = 0; i < k; ++i) {
        da = rot90(da);
        db = rot90(db);
        dc = rot90(dc);
    }
    const Point a2{flank_a.x + da.x, flank_a.y + da.y};
    const Point b2{flank_b.x + db.x, flank_b.y + db.y};
    const Point a3{a2.x + dc.x, a2.y + dc.y};
    return {{a2, 0}, {b2, 1}, {a3, 0}};
}

// ---------------------------------------------------------------------------
// Strip windows: gaps 1..2 in strip order must be within unit distance,
// gaps 3..6 beyond it.

// Cheap floating-point screen for window_ok: rejects candidates that violate
// a window by a clear margin, so the exact check only runs on plausible ones.
// Near-threshold pairs always fall through to the exact arithmetic.
bool window_plausible(const std::vector<std::pair<double, double>>& seq) {
    constexpr double kMargin = 1e-9;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        for (std::size_t j = i + 1; j < seq.size() && j <= i + 6; ++j) {
            const double dx = seq[j].first - seq[i].first;
            const double dy = seq[j].second - seq[i].second;
            const double d2 = dx * dx + dy * dy;
            if (j - i <= 2) {
                if (d2 > 1 + kMargin) return false;
            } else {
                if (d2 < 1 - kMargin) return false;
            }
        }
    }
    return true;
}

bool window_ok(const std::vector<Point>& seq) {
    const Rational one(1);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        for (std::size_t j = i + 1; j < seq.size() && j <= i + 6; ++j) {
            const Rational d2 = dist2(seq[i], seq[j]);
            if (j - i <= 2) {
                if (d2 > one) return false;
            } else {
                if (d2 <= one) return false;
            }
        }
    }
    return true;
}

// Translate a template so its entry walls coincide with the given wall
// offsets, with the template origin's along-coordinate at `anchor_along`.
std::vector<TVert> place_template(const std::vector<TVert>& tpl, int hin,
                                  const Rational cur_off[2],
                                  const Rational& anchor_along) {
    const TVert* first[2] = {nullptr, nullptr};
    for (const auto& v : tpl)
        if (!first[v.wall]) first[v.wall] = &v;
    const Rational doff = cur_off[0] - line_offset(hin, first[0]->p);
    const Rational doffb = cur_off[1] - line_offset(hin, first[1]->p);
    if (!(doff == doffb)) throw CrossingLayout("corridor wall separation mismatch");
    Rational tx, ty;
    switch (hin % 4) {
        case 0:
            ty = doff;
            tx = anchor_along * Rational(kDirX[hin]);
            break;
        case 2:
            tx = doff;
            ty = anchor_along * Rational(kDirY[hin]);
            break;
        case 1: {
            const Rational s = anchor_along * Rational(kDirX[hin]);  // tx + ty
            tx = (s - doff) / Rational(2);
            ty = (s + doff) / Rational(2);
            break;
        }
        default: {
            const Rational s = anchor_along * Rational(kDirX[hin]);  // tx - ty
            tx = (s + doff) / Rational(2);
            ty = (doff - s) / Rational(2);
            break;
        }
    }
    std::vector<TVert> out = tpl;
    for (auto& v : out) {
        v.p.x = v.p.x + tx;
        v.p.y = v.p.y + ty;
    }
    return out;
}

// ---------------------------------------------------------------------------

struct Builder {
    std::vector<Point> pts;
    std::vector<int> unit;
    std::vector<std::pair<std::size_t, std::size_t>> planned;
    std::vector<std::pair<std::size_t, std::size_t>> boundary;

    std::size_t add(const Point& p, int u) {
        pts.push_back(p);
        unit.push_back(u);
        return pts.size() - 1;
    }
    void plan(std::size_t a, std::size_t b) {
        planned.emplace_back(std::min(a, b), std::max(a, b));
    }
    void wall_edge(std::size_t a, std::size_t b) { boundary.emplace_back(a, b); }
};

struct Leg {
    int heading = 0;
    Rational wall_off[2];
    std::vector<Point> before;  // strip verts preceding the leg (tail, <= 7)
    std::vector<Point> after;   // strip verts following the leg (head, <= 7)
    int first_wall = 0;
    int parity = 0;  // required count mod 2
    std::vector<int> valid;
    std::map<int, std::vector<Point>> cache;

    // n vertices with end paddings: the first and last along-intervals are
    // widened by pad0 / pad1 relative to the uniform interior spacing, since
    // the junction windows are tighter than the interior ones.  A positive
    // shrink narrows the second and penultimate intervals, which buys room
    // for wide end intervals on short legs without breaking the two-apart
    // adjacency window.
    std::vector<Point> points(int n, const Rational& pad0, const Rational& pad1,
                              const Rational& shrink) const {
        const Rational a0 = along(heading, before.back());
        const Rational a1 = along(heading, after.front());
        std::vector<Rational> iv(n + 1, Rational(0));
        const Rational zero(0);
        Rational adj = pad0 + pad1;
        if (n >= 3) adj = adj - shrink - shrink;
        const Rational inner = (a1 - a0 - adj) / Rational(n + 1);
        for (int j = 0; j <= n; ++j) iv[j] = inner;
        iv.front() = iv.front() + pad0;
        iv.back() = iv.back() + pad1;
        if (n >= 3) {
            iv[1] = iv[1] - shrink;
            iv[n - 1] = iv[n - 1] - shrink;
        }
        std::vector<Point> out;
        Rational acc = a0;
        for (int j = 1; j <= n; ++j) {
            acc = acc + iv[j - 1];
            const Rational aj = snap320(acc);
            out.push_back(wall_point(heading, wall_off[(first_wall + (j - 1)) % 2], aj));
        }
        return out;
    }

    void enumerate_counts() {
        const double a0 = along(heading, before.back()).to_double();
        const double a1 = along(heading, after.front()).to_double();
        const double span = a1 - a0;
        if (span <= 0) return;
        const double unit_len = diagonal(heading) ? std::sqrt(2.0) / 2.0 : 1.0;
        const double geo = span * unit_len;  // euclidean length of the gap
        const int lo = std::max(0, static_cast<int>(geo / 0.70) - 3);
        const int hi = static_cast<int>(geo / 0.25) + 3;

        // Double-precision mirror of the context, for the cheap screen.
        std::vector<std::pair<double, double>> dseq;
        for (const Point& p : before) dseq.emplace_back(p.x.to_double(), p.y.to_double());
        const std::size_t cursor = dseq.size();
        const double off_d[2] = {wall_off[0].to_double(), wall_off[1].to_double()};
        for (const Point& p : after) dseq.emplace_back(p.x.to_double(), p.y.to_double());

        // Mirrors points(): candidate wall positions in doubles, including the
        // 1/320 grid snap.  Only candidates that survive the approximate
        // window screen get exact construction and the exact check.
        const auto try_candidate = [&](int n, long p0, long p1, long s) -> bool {
            const double pad0 = 3.0 * p0 / 20, pad1 = 3.0 * p1 / 20, shr = 3.0 * s / 40;
            double adj = pad0 + pad1;
            if (n >= 3) adj -= 2 * shr;
            const double inner = (span - adj) / (n + 1);
            std::vector<std::pair<double, double>> cand(dseq);
            double acc = a0;
            for (int j = 1; j <= n; ++j) {
                double step = inner;
                if (j == 1) step += pad0;
                if (n >= 3 && (j == 2 || j == n)) step -= shr;
                acc += step;
                const double aj = std::lround(acc * 320.0) / 320.0;
                const double off = off_d[(first_wall + (j - 1)) % 2];
                std::pair<double, double> p;
                switch (heading % 4) {
                    case 0: p = {aj * kDirX[heading], off}; break;
                    case 2: p = {off, aj * kDirY[heading]}; break;
                    case 1: {
                        const double sv = aj * kDirX[heading];
                        p = {(sv - off) / 2, (sv + off) / 2};
                        break;
                    }
                    default: {
                        const double sv = aj * kDirX[heading];
                        p = {(sv + off) / 2, (off - sv) / 2};
                        break;
                    }
                }
                cand.insert(cand.begin() + cursor + (j - 1), p);
            }
            if (!window_plausible(cand)) return false;

            std::vector<Point> pts = points(n, Rational(3 * p0, 20), Rational(3 * p1, 20),
                                            Rational(3 * s, 40));
            std::vector<Point> seq = before;
            seq.insert(seq.end(), pts.begin(), pts.end());
            seq.insert(seq.end(), after.begin(), after.end());
            if (!window_ok(seq)) return false;
            valid.push_back(n);
            cache[n] = std::move(pts);
            return true;
        };

        static const long kPads[] = {0, 1, 2, 3, 4, -1};  // in units of 3/20
        static const long kShrinks[] = {0, 1, 2, 3};      // in units of 3/40
        for (int n = lo; n <= hi; ++n) {
            if (n % 2 != parity) continue;
            bool found = false;
            for (long s : kShrinks) {
                for (long p0 : kPads) {
                    for (long p1 : kPads) {
                        if (try_candidate(n, p0, p1, s)) {
                            found = true;
                            break;
                        }
                    }
                    if (found) break;
                }
                if (found) break;
            }
        }
    }
};

int heading_of(const Point& from, const Point& to) {
    const Rational dx = to.x - from.x, dy = to.y - from.y;
    const Rational zero(0);
    const int sx = dx < zero ? -1 : (zero < dx ? 1 : 0);
    const int sy = dy < zero ? -1 : (zero < dy ? 1 : 0);
    if (sx == 0 && sy == 0) throw CrossingLayout("zero-length corridor segment");
    if (sx != 0 && sy != 0) {
        const Rational ax = sx > 0 ? dx : zero - dx;
        const Rational ay = sy > 0 ? dy : zero - dy;
        if (!(ax == ay)) throw CrossingLayout("corridor segment is not compass-aligned");
    }
    for (int h = 0; h < 8; ++h)
        if (kDirX[h] == sx && kDirY[h] == sy) return h;
    throw CrossingLayout("corridor segment is not compass-aligned");
}

std::pair<Scene, PolyCertificate> compile_impl(const PlanarInput& in,
                                               bool require_regular) {
    const std::size_t n = in.graph.n;
    if (in.centers.size() != n)
        throw CrossingLayout("layout has wrong number of chamber centers");

    // --- input validation -------------------------------------------------
    {
        std::set<std::pair<std::size_t, std::size_t>> seen;
        std::vector<std::size_t> deg(n, 0);
        for (const auto& r : in.routes) {
            if (r.u >= n || r.v >= n)
                throw CrossingLayout("route endpoint out of range");
            if (r.u == r.v) throw NotFourRegular("self-loop");
            const auto key = std::minmax(r.u, r.v);
            if (!seen.insert({key.first, key.second}).second)
                throw NotFourRegular("parallel edges");
            ++deg[r.u];
            ++deg[r.v];
            if (r.k <= 0 || r.k % 3 != 0)
                throw BadChainLength(
                    "requested chain length must be a positive multiple of 3");
        }
        if (require_regular)
            for (std::size_t v = 0; v < n; ++v)
                if (deg[v] != 4) throw NotFourRegular("vertex degree is not 4");
    }

    // --- route headings and mouth bookkeeping -----------------------------
    std::vector<std::vector<Point>> route_pts(in.routes.size());
    std::vector<std::vector<int>> route_hs(in.routes.size());
    std::vector<std::vector<int>> mouths_used(n);
    for (std::size_t r = 0; r < in.routes.size(); ++r) {
        auto& pts = route_pts[r];
        pts.push_back(in.centers[in.routes[r].u]);
        for (const Point& w : in.routes[r].waypoints) pts.push_back(w);
        pts.push_back(in.centers[in.routes[r].v]);
        auto& hs = route_hs[r];
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            hs.push_back(heading_of(pts[i], pts[i + 1]));
        if (!diagonal(hs.front()) || !diagonal(hs.back()))
            throw CrossingLayout("corridor must leave a chamber diagonally");
        for (std::size_t i = 0; i + 1 < hs.size(); ++i) {
            const int d = (hs[i + 1] - hs[i] + 8) % 8;
            if (d != 1 && d != 7)
                throw CrossingLayout("corridor bend is not a 45 degree turn");
        }
        const int hu = hs.front();
        const int hv = (hs.back() + 4) % 8;
        for (int h : mouths_used[in.routes[r].u])
            if (h == hu) throw CrossingLayout("two corridors share a mouth");
        for (int h : mouths_used[in.routes[r].v])
            if (h == hv) throw CrossingLayout("two corridors share a mouth");
        mouths_used[in.routes[r].u].push_back(hu);
        mouths_used[in.routes[r].v].push_back(hv);
    }

    // --- chambers ----------------------------------------------------------
    Builder b;
    const ChamberShape shape = chamber_shape();
    std::vector<std::array<std::size_t, 12>> chamber_ids(n);
    for (std::size_t v = 0; v < n; ++v) {
        const Point& c = in.centers[v];
        auto& ids = chamber_ids[v];
        for (std::size_t i = 0; i < 12; ++i)
            ids[i] = b.add(Point{c.x + shape.c[i].x, c.y + shape.c[i].y},
                           static_cast<int>(v));
        const int flanks[8] = {1, 2, 4, 5, 7, 8, 10, 11};
        for (int f : flanks) b.plan(ids[0], ids[static_cast<std::size_t>(f)]);
        const int pairs[4][2] = {{1, 2}, {4, 5}, {7, 8}, {10, 11}};
        for (const auto& e : pairs)
            b.plan(ids[static_cast<std::size_t>(e[0])], ids[static_cast<std::size_t>(e[1])]);
        const int arcs[8][2] = {{0, 1}, {2, 3}, {3, 4}, {5, 6},
                                {6, 7}, {8, 9}, {9, 10}, {11, 0}};
        for (const auto& e : arcs) {
            b.plan(ids[static_cast<std::size_t>(e[0])], ids[static_cast<std::size_t>(e[1])]);
            b.wall_edge(ids[static_cast<std::size_t>(e[0])],
                        ids[static_cast<std::size_t>(e[1])]);
        }
        for (int slot = 0; slot < 4; ++slot) {
            bool used = false;
            for (int h : mouths_used[v])
                if (mouth_cap_slot(h) == slot) used = true;
            if (used) continue;
            const std::size_t cap =
                b.add(Point{c.x + shape.cap[static_cast<std::size_t>(slot)].x,
                            c.y + shape.cap[static_cast<std::size_t>(slot)].y},
                      static_cast<int>(v));
            const int gf[4][2] = {{1, 2}, {4, 5}, {7, 8}, {10, 11}};
            b.wall_edge(ids[static_cast<std::size_t>(gf[slot][0])], cap);
            b.wall_edge(cap, ids[static_cast<std::size_t>(gf[slot][1])]);
        }
    }

    // --- corridors ----------------------------------------------------------
    struct CompiledCorridor {
        std::vector<std::size_t> strip, wall_a, wall_b;
    };
    std::vector<CompiledCorridor> corridors(in.routes.size());

    for (std::size_t r = 0; r < in.routes.size(); ++r) {
        const auto& route = in.routes[r];
        const auto& hs = route_hs[r];
        const auto& wps = route_pts[r];
        const int unit = static_cast<int>(n + r);

        int fa, fb;
        mouth_flanks(hs.front(), fa, fb);
        const auto& ids_u = chamber_ids[route.u];
        const Point flank_a_u = b.pts[ids_u[static_cast<std::size_t>(fa)]];
        const Point flank_b_u = b.pts[ids_u[static_cast<std::size_t>(fb)]];

        const int hv_out = (hs.back() + 4) % 8;
        int ga, gb;
        mouth_flanks(hv_out, ga, gb);
        const auto& ids_v = chamber_ids[route.v];
        const Point flank_a_v = b.pts[ids_v[static_cast<std::size_t>(ga)]];
        const Point flank_b_v = b.pts[ids_v[static_cast<std::size_t>(gb)]];

        std::vector<TVert> far_ext = mouth_extension(hv_out, flank_a_v, flank_b_v);
        std::reverse(far_ext.begin(), far_ext.end());
        for (auto& v : far_ext) v.wall ^= 1;

        // Fixed blocks: near mouth, corners, far mouth. The far-mouth entry
        // wall offsets are the target the last corner must be solved for.
        std::vector<std::vector<TVert>> blocks;
        blocks.push_back(mouth_extension(hs.front(), flank_a_u, flank_b_u));
        Rational cur_off[2] = {line_offset(hs.front(), blocks[0][2].p),
                               line_offset(hs.front(), blocks[0][1].p)};
        Rational far_off[2];
        {
            const TVert* first[2] = {nullptr, nullptr};
            for (const auto& v : far_ext)
                if (!first[v.wall]) first[v.wall] = &v;
            far_off[0] = line_offset(hs.back(), first[0]->p);
            far_off[1] = line_offset(hs.back(), first[1]->p);
        }

        const std::size_t ncorners = route.waypoints.size();
        for (std::size_t w = 0; w < ncorners; ++w) {
            const std::vector<TVert> tpl = corner_template(hs[w], hs[w + 1]);
            Rational anchor = along(hs[w], wps[w + 1]);
            if (w + 1 == ncorners) {
                // Solve the along-anchor so the exit wall A offset equals the
                // far mouth's; exit offset is affine in the anchor.
                const auto probe = [&](const Rational& a) {
                    const auto placed = place_template(tpl, hs[w], cur_off, a);
                    const TVert* last0 = nullptr;
                    for (const auto& v : placed)
                        if (v.wall == 0) last0 = &v;
                    return line_offset(hs[w + 1], last0->p);
                };
                const Rational o0 = probe(anchor);
                const Rational o1 = probe(anchor + Rational(1));
                const Rational slope = o1 - o0;
                if (slope == Rational(0))
                    throw CrossingLayout("degenerate corner alignment");
                anchor = anchor + (far_off[0] - o0) / slope;
            }
            std::vector<TVert> placed = place_template(tpl, hs[w], cur_off, anchor);
            const TVert* last[2] = {nullptr, nullptr};
            for (const auto& v : placed) last[v.wall] = &v;
            cur_off[0] = line_offset(hs[w + 1], last[0]->p);
            cur_off[1] = line_offset(hs[w + 1], last[1]->p);
            blocks.push_back(std::move(placed));
        }
        if (!(cur_off[0] == far_off[0]) || !(cur_off[1] == far_off[1]))
            throw CrossingLayout("corridor does not meet the far chamber mouth");
        blocks.push_back(far_ext);

        // Legs between consecutive blocks.
        std::vector<Leg> legs(blocks.size() - 1);
        for (std::size_t l = 0; l + 1 < blocks.size(); ++l) {
            Leg& leg = legs[l];
            leg.heading = hs[l];
            const auto& prev = blocks[l];
            const auto& next = blocks[l + 1];
            const TVert* lastw[2] = {nullptr, nullptr};
            for (const auto& v : prev) lastw[v.wall] = &v;
            leg.wall_off[0] = line_offset(hs[l], lastw[0]->p);
            leg.wall_off[1] = line_offset(hs[l], lastw[1]->p);
            if (l == 0) {
                leg.before.push_back(b.pts[ids_u[0]]);  // center, strip position 0
                leg.before.push_back(flank_a_u);
                leg.before.push_back(flank_b_u);
            }
            for (const auto& v : prev) leg.before.push_back(v.p);
            while (leg.before.size() > 7)
                leg.before.erase(leg.before.begin());
            for (const auto& v : next) leg.after.push_back(v.p);
            if (l + 2 == blocks.size()) {
                leg.after.push_back(flank_b_v);  // our wall A
                leg.after.push_back(flank_a_v);  // our wall B
                leg.after.push_back(b.pts[ids_v[0]]);
            }
            while (leg.after.size() > 7) leg.after.pop_back();
            leg.first_wall = prev.back().wall ^ 1;
            leg.parity = (prev.back().wall == next.front().wall) ? 1 : 0;
            leg.enumerate_counts();
            if (leg.valid.empty()) {
                std::ostringstream os;
                os << "corridor leg admits no feasible vertex count (leg " << l
                   << ", heading " << hs[l] << ", parity " << leg.parity << ", from "
                   << along(hs[l], leg.before.back()).to_double() << " to "
                   << along(hs[l], leg.after.front()).to_double() << ")";
                throw BadChainLength(os.str());
            }
        }

        // Strip length T = 10 + 6 * corners + sum(N); centers are forced apart
        // iff (T + 1) % 3 != 0, i.e. sum(N) % 3 != 1.
        std::vector<int> chosen(legs.size());
        long total = 0;
        for (std::size_t l = 0; l < legs.size(); ++l) {
            chosen[l] = legs[l].valid.front();
            total += chosen[l];
        }
        if (total % 3 == 1) {
            bool ok = false;
            for (std::size_t l = 0; l < legs.size() && !ok; ++l)
                for (int alt : legs[l].valid) {
                    if ((total - chosen[l] + alt) % 3 != 1) {
                        total = total - chosen[l] + alt;
                        chosen[l] = alt;
                        ok = true;
                        break;
                    }
                }
            if (!ok)
                throw BadChainLength("corridor cannot reach a valid strip length mod 3");
        }

        // Emit the strip with planned chain edges (gaps 1 and 2).
        CompiledCorridor& cc = corridors[r];
        auto emit = [&](std::size_t id, int wall) {
            if (!cc.strip.empty()) b.plan(cc.strip.back(), id);
            if (cc.strip.size() >= 2) b.plan(cc.strip[cc.strip.size() - 2], id);
            cc.strip.push_back(id);
            (wall == 0 ? cc.wall_a : cc.wall_b).push_back(id);
        };
        emit(ids_u[static_cast<std::size_t>(fa)], 0);
        emit(ids_u[static_cast<std::size_t>(fb)], 1);
        for (std::size_t blk = 0; blk < blocks.size(); ++blk) {
            if (blk > 0) {
                const auto& pts = legs[blk - 1].cache[chosen[blk - 1]];
                for (std::size_t j = 0; j < pts.size(); ++j)
                    emit(b.add(pts[j], unit),
                         (legs[blk - 1].first_wall + static_cast<int>(j)) % 2);
            }
            for (const auto& tv : blocks[blk]) emit(b.add(tv.p, unit), tv.wall);
        }
        emit(ids_v[static_cast<std::size_t>(gb)], 0);  // far B flank is our wall A
        emit(ids_v[static_cast<std::size_t>(ga)], 1);

        // Full-strip check with both centers included.
        {
            std::vector<Point> seq;
            seq.push_back(b.pts[ids_u[0]]);
            for (std::size_t id : cc.strip) seq.push_back(b.pts[id]);
            seq.push_back(b.pts[ids_v[0]]);
            if (!window_ok(seq))
                throw BadChainLength("corridor strip violates its distance windows");
            const long T = static_cast<long>(cc.strip.size());
            if ((T + 1) % 3 == 0)
                throw BadChainLength("corridor strip length is degenerate mod 3");
            if (T < 2L * route.k)
                throw BadChainLength("corridor too short for requested chain length");
        }
        for (std::size_t i = 0; i + 1 < cc.wall_a.size(); ++i)
            b.wall_edge(cc.wall_a[i], cc.wall_a[i + 1]);
        for (std::size_t i = 0; i + 1 < cc.wall_b.size(); ++i)
            b.wall_edge(cc.wall_b[i], cc.wall_b[i + 1]);
    }

    // --- clearance ----------------------------------------------------------
    // Any unit-distance pair between different units must be planned (mouth
    // attachments); same-corridor pairs far apart in strip order must not be
    // within unit distance either (self-collision).
    {
        std::set<std::pair<std::size_t, std::size_t>> planned_set(b.planned.begin(),
                                                                  b.planned.end());
        std::map<std::size_t, long> strip_pos;
        for (const auto& cc : corridors)
            for (std::size_t i = 0; i < cc.strip.size(); ++i)
                strip_pos.emplace(cc.strip[i], static_cast<long>(i));
        std::map<std::pair<long, long>, std::vector<std::size_t>> grid;
        std::vector<double> xs(b.pts.size()), ys(b.pts.size());
        for (std::size_t i = 0; i < b.pts.size(); ++i) {
            xs[i] = b.pts[i].x.to_double();
            ys[i] = b.pts[i].y.to_double();
            grid[{static_cast<long>(std::floor(xs[i])),
                  static_cast<long>(std::floor(ys[i]))}].push_back(i);
        }
        const Rational one(1);
        for (std::size_t i = 0; i < b.pts.size(); ++i) {
            const long cx = static_cast<long>(std::floor(xs[i]));
            const long cy = static_cast<long>(std::floor(ys[i]));
            for (long gx = cx - 1; gx <= cx + 1; ++gx)
                for (long gy = cy - 1; gy <= cy + 1; ++gy) {
                    const auto it = grid.find({gx, gy});
                    if (it == grid.end()) continue;
                    for (std::size_t j : it->second) {
                        if (j <= i) continue;
                        const double dx = xs[i] - xs[j], dy = ys[i] - ys[j];
                        if (dx * dx + dy * dy > 1.01) continue;
                        if (!(dist2(b.pts[i], b.pts[j]) <= one)) continue;
                        const auto key = std::minmax(i, j);
                        if (planned_set.count({key.first, key.second})) continue;
                        if (b.unit[i] == b.unit[j]) {
                            if (b.unit[i] < static_cast<int>(n)) continue;  // chamber
                            const auto pi = strip_pos.find(i), pj = strip_pos.find(j);
                            if (pi != strip_pos.end() && pj != strip_pos.end() &&
                                std::labs(pi->second - pj->second) <= 6)
                                continue;
                        }
                        throw CrossingLayout("layout features interfere near (" +
                                             b.pts[i].x.str() + ", " + b.pts[i].y.str() +
                                             ")");
                    }
                }
        }
    }

    // --- rings --------------------------------------------------------------
    std::map<std::size_t, std::vector<std::size_t>> nbr;
    for (const auto& e : b.boundary) {
        nbr[e.first].push_back(e.second);
        nbr[e.second].push_back(e.first);
    }
    for (const auto& kv : nbr)
        if (kv.second.size() != 2)
            throw std::logic_error("reduce_poly: boundary is not 2-regular");
    if (nbr.size() != b.pts.size())
        throw std::logic_error("reduce_poly: boundary misses vertices");
    std::set<std::size_t> visited;
    std::vector<std::vector<std::size_t>> cycles;
    for (const auto& kv : nbr) {
        if (visited.count(kv.first)) continue;
        std::vector<std::size_t> cyc;
        std::size_t prev = kv.first, cur = kv.second[0];
        cyc.push_back(prev);
        visited.insert(prev);
        while (cur != kv.first) {
            cyc.push_back(cur);
            visited.insert(cur);
            const auto& two = nbr[cur];
            const std::size_t nxt = (two[0] == prev) ? two[1] : two[0];
            prev = cur;
            cur = nxt;
        }
        cycles.push_back(std::move(cyc));
    }
    std::size_t outer_idx = 0;
    double best = -1;
    for (std::size_t c = 0; c < cycles.size(); ++c) {
        double area2 = 0;
        for (std::size_t i = 0; i < cycles[c].size(); ++i) {
            const Point& p = b.pts[cycles[c][i]];
            const Point& q = b.pts[cycles[c][(i + 1) % cycles[c].size()]];
            area2 += p.x.to_double() * q.y.to_double() - q.x.to_double() * p.y.to_double();
        }
        if (std::abs(area2) > best) {
            best = std::abs(area2);
            outer_idx = c;
        }
    }

    Scene scene;
    scene.kind = SceneKind::Polygon;
    std::vector<std::size_t> order;
    for (std::size_t id : cycles[outer_idx]) {
        scene.outer.push_back(b.pts[id]);
        order.push_back(id);
    }
    std::vector<std::size_t> hole_cycles;
    for (std::size_t c = 0; c < cycles.size(); ++c)
        if (c != outer_idx) hole_cycles.push_back(c);
    std::sort(hole_cycles.begin(), hole_cycles.end(),
              [&](std::size_t a, std::size_t c2) {
                  return *std::min_element(cycles[a].begin(), cycles[a].end()) <
                         *std::min_element(cycles[c2].begin(), cycles[c2].end());
              });
    for (std::size_t c : hole_cycles) {
        Ring ring;
        for (std::size_t id : cycles[c]) {
            ring.push_back(b.pts[id]);
            order.push_back(id);
        }
        scene.holes.push_back(std::move(ring));
    }

    std::vector<std::size_t> newindex(b.pts.size());
    for (std::size_t i = 0; i < order.size(); ++i) newindex[order[i]] = i;

    PolyCertificate cert;
    for (std::size_t v = 0; v < n; ++v)
        cert.center_anchor[v] = newindex[chamber_ids[v][0]];
    cert.planned.n = b.pts.size();
    const Rational one(1);
    for (const auto& e : b.planned)
        cert.planned.add_edge(newindex[e.first], newindex[e.second]);
    for (const auto& e : b.boundary) {
        // Boundary neighbors are UDVG edges unless too far (cap edges).
        if (dist2(b.pts[e.first], b.pts[e.second]) <= one)
            cert.planned.add_edge(newindex[e.first], newindex[e.second]);
    }
    cert.planned.finalize();

    return {std::move(scene), std::move(cert)};
}

}  // namespace

std::pair<Scene, PolyCertificate> compile_planar(const PlanarInput& input) {
    return compile_impl(input, true);
}

std::pair<Scene, PolyCertificate> compile_planar_unchecked(const PlanarInput& input) {
    return compile_impl(input, false);
}

Coloring decode_graph_coloring(const PlanarInput& input, const PolyCertificate& cert,
                               const Coloring& coloring) {
    Coloring out(input.graph.n, 0);
    for (std::size_t v = 0; v < input.graph.n; ++v) {
        const auto it = cert.center_anchor.find(v);
        if (it == cert.center_anchor.end() || it->second >= coloring.size())
            throw CorruptWitness("certificate anchor out of range");
        const int c = coloring[it->second];
        if (c < 0 || c > 2) throw CorruptWitness("anchor color out of range");
        out[v] = static_cast<std::uint8_t>(c);
    }
    for (const auto& e : input.graph.edges)
        if (out[e.first] == out[e.second])
            throw CorruptWitness("decoded coloring is not proper");
    return out;
}

std::optional<Coloring> graph_3col_oracle(const Graph& g) {
    return solve_3coloring(g, {});
}

PlanarInput parse_planar_input(const std::string& text) {
    using nlohmann::json;
    const json j = json::parse(text);
    PlanarInput in;
    auto to_rational = [](const json& v) {
        if (v.is_string()) return Rational::parse(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<long>());
        std::ostringstream os;
        os << std::setprecision(17) << v.get<double>();
        return Rational::parse(os.str());
    };
    std::map<long, std::size_t> idmap;
    for (const auto& v : j.at("vertices")) {
        idmap[v.at("id").get<long>()] = in.centers.size();
        in.centers.push_back(Point{to_rational(v.at("x")), to_rational(v.at("y"))});
    }
    in.graph.n = in.centers.size();
    for (const auto& e : j.at("edges")) {
        PlanarInput::Route r;
        r.u = idmap.at(e.at("u").get<long>());
        r.v = idmap.at(e.at("v").get<long>());
        if (e.contains("k")) r.k = e.at("k").get<int>();
        if (e.contains("waypoints"))
            for (const auto& w : e.at("waypoints"))
                r.waypoints.push_back(Point{to_rational(w.at(0)), to_rational(w.at(1))});
        in.graph.add_edge(r.u, r.v);
        in.routes.push_back(std::move(r));
    }
    in.graph.finalize();
    return in;
}

}  // namespace udvg
