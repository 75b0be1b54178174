#include "udvg/coloring.hpp"

#include <array>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace udvg {

bool coloring_is_proper(const Graph& g, const Coloring& c) {
    if (c.size() != g.n) return false;
    for (auto v : c)
        if (v > 2) return false;
    for (const auto& [u, v] : g.edges)
        if (c[u] == c[v]) return false;
    return true;
}

namespace {

constexpr std::uint8_t kFull = 0b111;

// Sets of decision levels, used for conflict-directed backjumping: bit 0 is
// the root level (preassignments), bit l the l-th decision.
using LevelSet = std::vector<std::uint64_t>;

struct Solver {
    const Graph& g;
    std::vector<std::vector<std::size_t>> adj;
    std::vector<std::int8_t> color;
    std::vector<std::uint8_t> domain;
    std::size_t words;              // LevelSet word count
    std::vector<LevelSet> expl;     // per vertex: levels explaining its domain removals
    LevelSet conflict;              // levels explaining the most recent failure
    std::vector<std::uint32_t> stamp;
    std::uint32_t stamp_cur = 0;

    struct TrailEntry {
        std::uint32_t v;
        std::uint8_t prev_domain;
        LevelSet prev_expl;
    };
    std::vector<TrailEntry> trail;

    explicit Solver(const Graph& graph) : g(graph), adj(graph.adjacency()) {
        color.assign(g.n, -1);
        domain.assign(g.n, kFull);
        words = (g.n + 2 + 63) / 64;
        expl.assign(g.n, LevelSet(words, 0));
        stamp.assign(g.n, 0);
    }

    static void orset(LevelSet& a, const LevelSet& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] |= b[i];
    }
    static void setbit(LevelSet& a, std::size_t l) { a[l / 64] |= 1ull << (l % 64); }
    static bool testbit(const LevelSet& a, std::size_t l) {
        return (a[l / 64] >> (l % 64)) & 1;
    }
    static void clearbit(LevelSet& a, std::size_t l) { a[l / 64] &= ~(1ull << (l % 64)); }

    std::size_t mark() const { return trail.size(); }

    void rewind(std::size_t m) {
        while (trail.size() > m) {
            TrailEntry& e = trail.back();
            domain[e.v] = e.prev_domain;
            expl[e.v] = std::move(e.prev_expl);
            trail.pop_back();
            if (std::popcount(domain[e.v]) > 1 || color[e.v] >= 0) color[e.v] = -1;
        }
    }

    // Remove `bits` from domain[w] because of the decisions in `why`.
    bool remove(std::uint32_t w, std::uint8_t bits, const LevelSet& why,
                std::vector<std::uint32_t>& queue, std::vector<std::uint32_t>& pairs) {
        bits &= domain[w];
        if (!bits) return true;
        trail.push_back({w, domain[w], expl[w]});
        domain[w] &= static_cast<std::uint8_t>(~bits);
        orset(expl[w], why);
        if (domain[w] == 0) {
            conflict = expl[w];
            return false;
        }
        const int pc = std::popcount(domain[w]);
        if (pc == 1) queue.push_back(w);
        else if (pc == 2) pairs.push_back(w);
        return true;
    }

    // Assign every single-domain vertex and strip its color from neighbors,
    // to fixpoint.  Additionally: two adjacent uncolored vertices sharing the
    // same 2-color domain use up both colors, so their common neighbors lose
    // them (this lets forced values travel through otherwise symmetric
    // sections without branching).  On failure, `conflict` explains it.
    bool propagate(std::vector<std::uint32_t>& queue) {
        std::vector<std::uint32_t> pairs;
        while (!queue.empty() || !pairs.empty()) {
            if (queue.empty()) {
                const std::uint32_t w = pairs.back();
                pairs.pop_back();
                if (color[w] >= 0 || std::popcount(domain[w]) != 2) continue;
                ++stamp_cur;
                for (std::size_t x : adj[w]) stamp[x] = stamp_cur;
                for (std::size_t u : adj[w]) {
                    if (color[u] >= 0 || domain[u] != domain[w]) continue;
                    LevelSet why = expl[w];
                    orset(why, expl[u]);
                    for (std::size_t x : adj[u]) {
                        if (x == w || stamp[x] != stamp_cur) continue;
                        if (color[x] >= 0) {
                            if (domain[w] & (1u << color[x])) {
                                conflict = why;
                                orset(conflict, expl[x]);
                                return false;
                            }
                            continue;
                        }
                        if (!remove(static_cast<std::uint32_t>(x), domain[w], why, queue,
                                    pairs))
                            return false;
                    }
                }
                continue;
            }
            const std::uint32_t v = queue.back();
            queue.pop_back();
            if (color[v] >= 0) continue;
            if (std::popcount(domain[v]) != 1) continue;
            color[v] = static_cast<std::int8_t>(std::countr_zero(domain[v]));
            const std::uint8_t bit = domain[v];
            for (std::uint32_t w : adj[v]) {
                if (color[w] >= 0) {
                    if (color[w] == color[v]) {
                        conflict = expl[v];
                        orset(conflict, expl[w]);
                        return false;
                    }
                    continue;
                }
                if (!remove(w, bit, expl[v], queue, pairs)) return false;
            }
        }
        return true;
    }

    // Assign v := c as the decision at `level` (0 = root) and propagate.
    bool decide(std::uint32_t v, std::uint8_t c, std::size_t level) {
        trail.push_back({v, domain[v], expl[v]});
        domain[v] = static_cast<std::uint8_t>(1u << c);
        setbit(expl[v], level);
        std::vector<std::uint32_t> queue{v};
        if (domain[v] == 0) {
            conflict = expl[v];
            return false;
        }
        return propagate(queue);
    }

    bool assign(std::uint32_t v, std::uint8_t c) {
        if (!(domain[v] & (1u << c))) {
            conflict = expl[v];
            return false;
        }
        return decide(v, c, 0);
    }

    // DSATUR branch choice: fewest remaining colors, then highest degree,
    // then lowest index.
    std::int64_t pick() const {
        std::int64_t best = -1;
        int best_dom = 4;
        std::size_t best_deg = 0;
        for (std::uint32_t v = 0; v < g.n; ++v) {
            if (color[v] >= 0) continue;
            const int dom = std::popcount(domain[v]);
            const std::size_t deg = adj[v].size();
            if (best < 0 || dom < best_dom || (dom == best_dom && deg > best_deg)) {
                best = v;
                best_dom = dom;
                best_deg = deg;
            }
        }
        return best;
    }

    // Conflict-directed backjumping: on failure `conflict` holds the decision
    // levels responsible, so callers whose level is not implicated fail
    // through without trying their remaining values.
    bool search(std::size_t level) {
        const std::int64_t v = pick();
        if (v < 0) return true;
        LevelSet total = expl[v];
        const std::uint8_t dom = domain[v];
        for (std::uint8_t c = 0; c < 3; ++c) {
            if (!(dom & (1u << c))) continue;
            const std::size_t m = mark();
            if (decide(static_cast<std::uint32_t>(v), c, level) && search(level + 1)) return true;
            LevelSet cs = std::move(conflict);
            rewind(m);
            if (!testbit(cs, level)) {
                conflict = std::move(cs);
                return false;
            }
            clearbit(cs, level);
            orset(total, cs);
        }
        conflict = std::move(total);
        return false;
    }

    // Enumerate completions branching in vertex index order; calls sink for
    // every proper coloring.  Returns false if the sink requested a stop.
    template <typename Sink>
    bool enumerate(std::uint32_t from, Sink&& sink) {
        std::uint32_t v = from;
        while (v < g.n && color[v] >= 0) ++v;
        if (v == g.n) {
            Coloring out(g.n);
            for (std::uint32_t i = 0; i < g.n; ++i) out[i] = static_cast<std::uint8_t>(color[i]);
            return sink(out);
        }
        for (std::uint8_t c = 0; c < 3; ++c) {
            if (!(domain[v] & (1u << c))) continue;
            const std::size_t m = mark();
            if (assign(v, c)) {
                if (!enumerate(v + 1, sink)) return false;
            }
            rewind(m);
        }
        return true;
    }
};

}  // namespace

std::optional<Coloring> solve_3coloring(const Graph& g, const Precoloring& fixed) {
    if (!fixed.empty() && fixed.size() != g.n)
        throw std::invalid_argument("precoloring size mismatch");
    Solver s(g);
    for (std::size_t v = 0; v < fixed.size(); ++v) {
        if (fixed[v] < 0) continue;
        if (fixed[v] > 2) throw std::invalid_argument("precoloring color out of range");
        if (!s.assign(static_cast<std::uint32_t>(v),
                      static_cast<std::uint8_t>(fixed[v])))
            return std::nullopt;
    }
    if (!s.search(1)) return std::nullopt;
    Coloring out(g.n);
    for (std::uint32_t v = 0; v < g.n; ++v) out[v] = static_cast<std::uint8_t>(s.color[v]);
    return out;
}

std::optional<Coloring> solve_3coloring(const Graph& g) { return solve_3coloring(g, {}); }

std::size_t default_enum_cap() {
    if (const char* env = std::getenv("UDVG_ENUM_CAP")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (...) {
        }
    }
    return 40;
}

Coloring canonical_coloring(const Coloring& c) {
    static constexpr std::array<std::array<std::uint8_t, 3>, 6> perms = {{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    Coloring best = c;
    Coloring tmp(c.size());
    for (const auto& p : perms) {
        for (std::size_t i = 0; i < c.size(); ++i) tmp[i] = p[c[i]];
        if (tmp < best) best = tmp;
    }
    return best;
}

EnumerateResult enumerate_3colorings(const Graph& g, const EnumerateOptions& opts) {
    const std::size_t cap = opts.cap ? opts.cap : default_enum_cap();
    EnumerateResult res;
    Solver s(g);
    const bool exhausted = s.enumerate(0, [&](const Coloring& c) {
        if (opts.up_to_permutation && c != canonical_coloring(c)) return true;
        res.colorings.push_back(c);
        return res.colorings.size() < cap;
    });
    res.truncated = !exhausted;
    return res;
}

}  // namespace udvg
