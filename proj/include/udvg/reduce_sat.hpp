#pragma once

// Compiler from Monotone NAE3SAT to segment scenes.
//
// The emitted scene realizes the formula as a unit disk visibility graph:
//   - a vertical "spine" strip pins one color as the shared neutral color;
//   - each variable gets a horizontal wire attached to the spine by a
//     triangle, leaving exactly the two non-neutral colors for its value;
//   - wires carry the value with period 3; taps drop the value down to
//     clause gadgets (a triangle with three pendant receivers), which are
//     3-colorable iff the three received colors are not all equal;
//   - wherever a tap must pass through a lower wire, the 18-vertex crossing
//     gadget is spliced in, transferring both colors across the crossing.
//
// compile_nae3sat also returns the full *planned* adjacency graph; the test
// suite asserts that the UDVG computed from the emitted geometry equals it
// exactly, which pins every intended edge and excludes every stray one.

#include "udvg/coloring.hpp"
#include "udvg/formula.hpp"
#include "udvg/graph.hpp"
#include "udvg/scene.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

namespace udvg {

// Thrown by decode_assignment when the coloring does not fit the certificate
// (e.g. a variable anchor carries the neutral color).
struct CorruptWitness : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ReductionCertificate {
    // variable -> a wire endpoint carrying the variable's value color.
    std::map<std::size_t, std::size_t> variable_anchor;
    // clause -> the three inner triangle vertices (x', y', z').
    std::vector<std::array<std::size_t, 3>> clause_anchor;
    // Vertex whose color is the shared neutral color.
    std::size_t neutral_anchor = 0;
    // One entry per spliced crossing gadget: vertices (a, r, h, o).
    std::vector<std::array<std::size_t, 4>> crossing_registry;
    // Intended adjacency of the emitted scene's UDVG.
    Graph planned;
};

std::pair<Scene, ReductionCertificate> compile_nae3sat(const Formula& f);

// Reads the variable values off a proper 3-coloring of the compiled scene's
// UDVG: true = the lexicographically smaller non-neutral color.  Throws if a
// variable anchor carries the neutral color (compiler bug, not user error).
Assignment decode_assignment(const Formula& f, const ReductionCertificate& cert,
                             const Coloring& coloring);

}  // namespace udvg
