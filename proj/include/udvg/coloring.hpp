#pragma once

// Exact 3-coloring for small-to-medium graphs.
//
// The solver runs DSATUR-ordered backtracking with unit propagation on
// forced vertices.  The witness returned by solve_3coloring is deterministic:
// among uncolored vertices the one with highest saturation (ties: highest
// degree, then lowest index) is branched next, and colors are tried in
// ascending order, so the same graph always yields the same coloring.
//
// enumerate_3colorings lists proper 3-colorings; with up_to_permutation set,
// only the lexicographically least member of each color-permutation orbit is
// kept.  Enumeration stops after `cap` solutions (see default_enum_cap).

#include "udvg/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace udvg {

using Coloring = std::vector<std::uint8_t>;  // values 0, 1, 2

// Precoloring: fixed colors for some vertices (-1 = free).
using Precoloring = std::vector<std::int8_t>;

bool coloring_is_proper(const Graph& g, const Coloring& c);

std::optional<Coloring> solve_3coloring(const Graph& g);
std::optional<Coloring> solve_3coloring(const Graph& g, const Precoloring& fixed);

struct EnumerateOptions {
    bool up_to_permutation = true;
    std::size_t cap = 0;  // 0 = default_enum_cap()
};

// Default enumeration cap: 40, overridable via environment UDVG_ENUM_CAP.
std::size_t default_enum_cap();

struct EnumerateResult {
    std::vector<Coloring> colorings;
    bool truncated = false;  // hit the cap before exhausting the space
};

EnumerateResult enumerate_3colorings(const Graph& g, const EnumerateOptions& opts = {});

// Lexicographically least coloring in the orbit of c under the 6 color
// permutations.
Coloring canonical_coloring(const Coloring& c);

}  // namespace udvg
