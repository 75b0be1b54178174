#pragma once

// JSON serialization for scenes, graphs, and colorings.
//
// Coordinates are serialized as canonical rational strings ("21/10"); decimal
// and integer forms are accepted on input.  Serialization is deterministic
// byte-for-byte: fixed key order, 2-space indent, trailing newline.

#include "udvg/coloring.hpp"
#include "udvg/graph.hpp"
#include "udvg/scene.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace udvg::io {

using Json = nlohmann::ordered_json;

// Raised on malformed documents; the CLI maps it to exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json scene_to_json(const Scene& scene);
Scene scene_from_json(const Json& j);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const Json& j, std::size_t expected_n);

// Precoloring file format: {"<vertex-index>": color, ...}
Precoloring precoloring_from_json(const Json& j, std::size_t n);

// Canonical text form (what every CLI command writes).
std::string dump(const Json& j);

Json parse_file(const std::string& path);
void write_file(const std::string& path, const Json& j);

// DIMACS-like graph edge list: "p edge <n> <m>" header, "e <u> <v>" lines
// with 1-based endpoints.
Graph graph_from_dimacs(const std::string& text);

}  // namespace udvg::io
