#include "udvg/graph.hpp"

#include <algorithm>

namespace udvg {

void Graph::add_edge(std::size_t u, std::size_t v) {
    if (u == v) return;
    if (u > v) std::swap(u, v);
    edges.emplace_back(u, v);
}

void Graph::finalize() {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<std::vector<std::size_t>> Graph::adjacency() const {
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

std::vector<std::size_t> Graph::degree() const {
    std::vector<std::size_t> d(n, 0);
    for (auto& [u, v] : edges) {
        ++d[u];
        ++d[v];
    }
    return d;
}

bool graphs_equal(const Graph& a, const Graph& b) {
    return a.n == b.n && a.edges == b.edges;
}

GraphDiff graph_diff(const Graph& a, const Graph& b) {
    GraphDiff d;
    std::set_difference(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                        std::back_inserter(d.only_in_a));
    std::set_difference(b.edges.begin(), b.edges.end(), a.edges.begin(), a.edges.end(),
                        std::back_inserter(d.only_in_b));
    return d;
}

}  // namespace udvg
