#pragma once

// Gadget fixtures: small scenes paired with the exact graph their unit disk
// visibility graph must equal (under the Closed threshold and the contract
// vertex indexing).  The test suite proves UDVG(scene) == reference for every
// fixture; downstream reduction compilers reuse the same geometry.

#include "udvg/graph.hpp"
#include "udvg/scene.hpp"

#include <map>
#include <string>
#include <vector>

namespace udvg {

struct GadgetFixture {
    std::string name;
    Scene scene;
    Graph reference;
    // Role name -> contract vertex index ("a", "r", "h", "o"; "u", "v";
    // "center", "leaf0".."leaf5"; "row0[0]", ...).
    std::map<std::string, std::size_t> anchors;
};

// Two staggered rows of horizontal unit segments forming a triangle strip;
// its UDVG is rigid (one 3-coloring up to color permutation) and transfers a
// color along the strip with period 3.  `pairs` = segments per row.
GadgetFixture long_edge_segments(int pairs);

// Three segments xx', yy', zz' whose inner endpoints form a triangle; the
// gadget is 3-colorable iff x, y, z do not all receive the same color.
GadgetFixture clause_gadget();

// Abstract 18-vertex crossing gadget (labels a..r).  It has exactly two
// 3-colorings up to permutation, and both satisfy color(a) = color(r) and
// color(h) = color(o), so it transfers two colors across a crossing.
Graph crossing_gadget_graph();

// Nine-segment realization of crossing_gadget_graph(); anchors a, r, h, o.
GadgetFixture crossing_gadget_segments();

// Corridor: a closed ribbon polygon with chains a_1..a_k and b_1..b_k between
// ports u and v.  Requires k a positive multiple of 3; then every proper
// 3-coloring gives u and v different colors.
GadgetFixture corridor(int k);

// Chamber: a 16-vertex polygon whose central vertex sees exactly the eight
// corridor attachment vertices at distance exactly 1; the four cap vertices
// sit beyond the unit threshold from everything else.
GadgetFixture chamber();

// Point-scene analogs: name is one of "long_edge", "crossing", "clause".
GadgetFixture point_gadget(const std::string& name);

// Three scenes (points, segments, polygon) each containing an induced
// K_{1,6}; the anchors name its center and six leaves.
std::vector<GadgetFixture> k16_fixtures();

// Every fixture above at representative parameters, for `verify gadget`.
std::vector<GadgetFixture> all_fixtures();

}  // namespace udvg
