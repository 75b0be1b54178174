#pragma once

// Simple undirected graph with contract-stable vertex indices and optional
// vertex labels.  Edges are kept as a sorted, deduplicated list of (u,v) with
// u < v, so two graphs compare equal iff they are identical edge-for-edge.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace udvg {

struct Graph {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // u < v, sorted
    std::vector<std::string> labels;                         // empty or size n

    void add_edge(std::size_t u, std::size_t v);
    void finalize();  // sort + dedupe
    bool has_edge(std::size_t u, std::size_t v) const;
    std::size_t edge_count() const { return edges.size(); }

    std::vector<std::vector<std::size_t>> adjacency() const;
    std::vector<std::size_t> degree() const;
};

struct GraphDiff {
    // Edges present in a but not b, and vice versa.
    std::vector<std::pair<std::size_t, std::size_t>> only_in_a, only_in_b;
    bool empty() const { return only_in_a.empty() && only_in_b.empty(); }
};

bool graphs_equal(const Graph& a, const Graph& b);
GraphDiff graph_diff(const Graph& a, const Graph& b);

}  // namespace udvg
