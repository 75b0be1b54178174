#include "udvg/lemmas.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace udvg {

std::vector<Point> scale_to_unit(const std::vector<Point>& points) {
    if (points.empty()) throw std::invalid_argument("scale_to_unit: empty point list");
    Rational phi(0);
    for (const Point& p : points) phi = std::max({phi, abs(p.x), abs(p.y)});
    Rational m(1);
    while (!(phi < m)) m = m * Rational(2);
    const Rational scale = Rational(2) * m;
    std::vector<Point> out;
    out.reserve(points.size());
    for (const Point& p : points) out.push_back({p.x / scale, p.y / scale});
    return out;
}

namespace {

bool extend_independent(const Graph& g, const std::vector<std::size_t>& nbrs,
                        std::vector<std::size_t>& picked, std::size_t from) {
    if (picked.size() == 6) return true;
    for (std::size_t i = from; i < nbrs.size(); ++i) {
        // Not enough neighbors left to reach six leaves.
        if (nbrs.size() - i < 6 - picked.size()) return false;
        const std::size_t cand = nbrs[i];
        bool ok = true;
        for (std::size_t p : picked)
            if (g.has_edge(p, cand)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        picked.push_back(cand);
        if (extend_independent(g, nbrs, picked, i + 1)) return true;
        picked.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_induced_k16(const Graph& g) {
    const auto adj = g.adjacency();
    for (std::size_t c = 0; c < g.n; ++c) {
        if (adj[c].size() < 6) continue;
        std::vector<std::size_t> picked;
        if (extend_independent(g, adj[c], picked, 0)) {
            std::vector<std::size_t> out;
            out.push_back(c);
            out.insert(out.end(), picked.begin(), picked.end());
            return out;
        }
    }
    return std::nullopt;
}

namespace {

std::optional<std::array<std::size_t, 3>> first_collinear_triple(const std::vector<Point>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k)
                if (orientation(pts[i], pts[j], pts[k]) == 0)
                    return std::array<std::size_t, 3>{i, j, k};
    return std::nullopt;
}

}  // namespace

std::vector<Point> perturb_general_position(const std::vector<Point>& points,
                                            const Rational& budget) {
    if (!(Rational(0) < budget))
        throw std::invalid_argument("perturb_general_position: budget must be positive");
    std::vector<Point> out = points;
    std::vector<int> round(points.size(), 0);
    while (auto triple = first_collinear_triple(out)) {
        const std::size_t k = (*triple)[2];
        if (++round[k] > 64)
            throw std::runtime_error("perturb_general_position: schedule exhausted");
        // Replace (not accumulate) the offender's offset: x gets budget/2^r,
        // y gets budget/4^r, so the displacement never exceeds the budget and
        // distinct rounds give distinct slopes.
        Rational dx = budget, dy = budget;
        for (int t = 0; t < round[k]; ++t) {
            dx = dx / Rational(2);
            dy = dy / Rational(4);
        }
        out[k] = {points[k].x + dx, points[k].y + dy};
    }
    return out;
}

}  // namespace udvg
