#pragma once

// Compiler from 4-regular simple planar graphs (with a supplied layout) to
// polygons with holes whose unit disk visibility graph is 3-colorable iff the
// input graph is.
//
// Each input vertex becomes a 12-vertex "chamber": a star-shaped cavity whose
// central vertex sees exactly the eight mouth vertices on its unit circle,
// two per mouth, with four mouths opening along the four diagonal compass
// directions.  Each input edge becomes a "corridor": a ribbon whose two walls
// carry a rigid triangle strip from one central vertex to the other; when the
// strip length is right (tracked mod 3) every proper 3-coloring gives the two
// centers different colors.  Corridor centerlines are supplied as polylines
// whose segments alternate between diagonal and axis-parallel headings,
// turning 45 degrees at each waypoint; the compiler expands them into wall
// templates and checks all local distance margins exactly.

#include "udvg/coloring.hpp"
#include "udvg/graph.hpp"
#include "udvg/scene.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace udvg {

struct PlanarInput {
    Graph graph;                  // simple, 4-regular
    std::vector<Point> centers;   // chamber center per vertex
    struct Route {
        std::size_t u = 0, v = 0;
        std::vector<Point> waypoints;  // corridor bends, in order from u to v
        int k = 3;                     // requested chain length, multiple of 3
    };
    std::vector<Route> routes;    // one per edge
};

struct PolyCertificate {
    std::map<std::size_t, std::size_t> center_anchor;  // input vertex -> scene vertex
    Graph planned;  // intended UDVG of the emitted scene, for exact checking
};

struct NotFourRegular : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CrossingLayout : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BadChainLength : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<Scene, PolyCertificate> compile_planar(const PlanarInput& input);

// Same compilation pipeline without the 4-regularity requirement; useful for
// exercising chambers and corridors in isolation.
std::pair<Scene, PolyCertificate> compile_planar_unchecked(const PlanarInput& input);

// Input vertex v gets the color of its chamber's central vertex.  Throws
// CorruptWitness (see reduce_sat.hpp) when the coloring does not fit.
Coloring decode_graph_coloring(const PlanarInput& input, const PolyCertificate& cert,
                               const Coloring& coloring);

// Independent ground truth on the input graph itself.
std::optional<Coloring> graph_3col_oracle(const Graph& g);

// PlanarInput JSON: {"vertices":[{"id","x","y"}],
//                    "edges":[{"u","v","waypoints":[[x,y],...],"k":int}]}
PlanarInput parse_planar_input(const std::string& text);

}  // namespace udvg
