#pragma once

// Executable classification lemmas: the scaling argument that collapses point
// visibility graphs into unit disk visibility graphs, the K_{1,6} obstruction
// search for unit disk graphs, and a deterministic general-position
// perturbation.

#include "udvg/geometry.hpp"
#include "udvg/graph.hpp"

#include <optional>
#include <vector>

namespace udvg {

// Divides every coordinate by 2M, where M is the least power of two strictly
// greater than the largest absolute coordinate (M = 1 for the all-zero set).
// The result fits in a disk of diameter 1 and has the same orientation
// predicate on every triple, so visibility is preserved exactly.
std::vector<Point> scale_to_unit(const std::vector<Point>& points);

// Searches for an induced K_{1,6}: a center plus six pairwise non-adjacent
// neighbors.  Returns {center, leaf0..leaf5} or nullopt.  Exact search;
// centers of degree < 6 are pruned.
std::optional<std::vector<std::size_t>> find_induced_k16(const Graph& g);

// Moves points by at most `budget` (L-infinity) so that no three are
// collinear.  Deterministic: offending points get offsets from a fixed
// halving schedule.  Throws if 64 rounds per point do not suffice.
std::vector<Point> perturb_general_position(const std::vector<Point>& points,
                                            const Rational& budget);

}  // namespace udvg
