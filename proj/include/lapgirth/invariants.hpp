#pragma once

#include <vector>

#include "lapgirth/graph.hpp"

namespace lapgirth {

// Shortest cycle length: for every edge uv, the BFS distance from u to v
// with uv removed, plus one.
Girth girth(const Graph& g);

// Vertices of one shortest cycle in traversal order; empty for forests.
std::vector<int> shortest_cycle(const Graph& g);

// True when `cycle` lists distinct vertices with consecutive entries (and
// the last/first pair) adjacent.
bool is_cycle_in(const Graph& g, const std::vector<int>& cycle);

bool is_connected(const Graph& g);
int component_count(const Graph& g);
// Connected and 2-regular.
bool is_cycle_graph(const Graph& g);
bool is_bipartite(const Graph& g);

// Vertices whose removal disconnects their component.
VertexSet cut_vertices(const Graph& g);

inline constexpr int kChromaticMaxVertices = 16;

// Exact chromatic number by iterative deepening over k from a clique lower
// bound to a greedy upper bound. Throws std::length_error above 16 vertices.
int chromatic_number(const Graph& g);

// max over edges uv of d(u) + d(v) - |N(u) & N(v)|, an upper bound on the
// largest Laplacian eigenvalue. Throws std::invalid_argument if edgeless.
int das_edge_bound(const Graph& g);

}  // namespace lapgirth
