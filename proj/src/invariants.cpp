#include "lapgirth/invariants.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace lapgirth {

namespace {

// Breadth-first search from `source`; fills parent[] (-1 at the root and
// for unreached vertices) and returns the distance to `target`, or -1.
int bfs_distance(const Graph& g, int source, int target, std::vector<int>& parent) {
  const int n = g.order();
  parent.assign(static_cast<std::size_t>(n), -1);
  VertexSet seen = vertex_bit(source);
  VertexSet frontier = seen;
  int distance = 0;
  while (frontier != 0) {
    if ((frontier >> target) & 1U) return distance;
    VertexSet next = 0;
    VertexSet f = frontier;
    while (f != 0) {
      const int u = std::countr_zero(f);
      f &= f - 1;
      VertexSet fresh = g.neighbors(u) & ~seen & ~next;
      next |= fresh;
      while (fresh != 0) {
        const int w = std::countr_zero(fresh);
        fresh &= fresh - 1;
        parent[w] = u;
      }
    }
    seen |= next;
    frontier = next;
    ++distance;
  }
  return -1;
}

VertexSet reach(const Graph& g, int source, VertexSet allowed) {
  VertexSet seen = vertex_bit(source);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    while (frontier != 0) {
      const int u = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.neighbors(u);
    }
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

int max_clique_size(const Graph& g, VertexSet candidates, int size, int best) {
  if (candidates == 0) return std::max(size, best);
  if (size + std::popcount(candidates) <= best) return best;
  while (candidates != 0) {
    if (size + std::popcount(candidates) <= best) break;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    best = max_clique_size(g, candidates & g.neighbors(v), size + 1, best);
  }
  return best;
}

std::vector<int> greedy_coloring(const Graph& g, int& colors_used) {
  // DSatur: colour the vertex with most distinct neighbour colours first.
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  colors_used = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    int pick_sat = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      std::uint64_t seen = 0;
      for (int w = 0; w < n; ++w) {
        if (g.adjacent(v, w) && color[w] >= 0) seen |= std::uint64_t{1} << color[w];
      }
      const int sat = std::popcount(seen);
      if (sat > pick_sat || (sat == pick_sat && g.degree(v) > g.degree(pick))) {
        pick = v;
        pick_sat = sat;
      }
    }
    std::uint64_t used = 0;
    for (int w = 0; w < n; ++w) {
      if (g.adjacent(pick, w) && color[w] >= 0) used |= std::uint64_t{1} << color[w];
    }
    color[pick] = std::countr_one(used);
    colors_used = std::max(colors_used, color[pick] + 1);
  }
  return color;
}

bool extend_coloring(const Graph& g, const std::vector<int>& order, std::size_t index,
                     int k, int max_used, std::vector<int>& color) {
  if (index == order.size()) return true;
  const int v = order[index];
  std::uint64_t forbidden = 0;
  VertexSet nbrs = g.neighbors(v);
  while (nbrs != 0) {
    const int w = std::countr_zero(nbrs);
    nbrs &= nbrs - 1;
    if (color[w] >= 0) forbidden |= std::uint64_t{1} << color[w];
  }
  // Colours beyond max_used + 1 are interchangeable with max_used + 1.
  const int limit = std::min(k - 1, max_used + 1);
  for (int c = 0; c <= limit; ++c) {
    if ((forbidden >> c) & 1U) continue;
    color[v] = c;
    if (extend_coloring(g, order, index + 1, k, std::max(max_used, c), color)) return true;
  }
  color[v] = -1;
  return false;
}

}  // namespace

Girth girth(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  std::vector<int> parent;
  for (const auto& [u, v] : g.edges()) {
    const int d = bfs_distance(g.without_edge(u, v), u, v, parent);
    if (d > 0) best = std::min(best, d + 1);
  }
  return best == std::numeric_limits<int>::max() ? Girth::infinite() : Girth::finite(best);
}

std::vector<int> shortest_cycle(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  std::vector<int> cycle;
  std::vector<int> parent;
  for (const auto& [u, v] : g.edges()) {
    const int d = bfs_distance(g.without_edge(u, v), u, v, parent);
    if (d > 0 && d + 1 < best) {
      best = d + 1;
      cycle.clear();
      for (int w = v; w != -1; w = parent[w]) cycle.push_back(w);
      std::reverse(cycle.begin(), cycle.end());
    }
  }
  return cycle;
}

bool is_cycle_in(const Graph& g, const std::vector<int>& cycle) {
  const std::size_t len = cycle.size();
  if (len < 3) return false;
  VertexSet seen = 0;
  for (std::size_t i = 0; i < len; ++i) {
    const int v = cycle[i];
    if (v < 0 || v >= g.order() || ((seen >> v) & 1U)) return false;
    seen |= vertex_bit(v);
    if (!g.adjacent(v, cycle[(i + 1) % len])) return false;
  }
  return true;
}

bool is_connected(const Graph& g) { return reach(g, 0, g.all_vertices()) == g.all_vertices(); }

int component_count(const Graph& g) {
  int count = 0;
  VertexSet remaining = g.all_vertices();
  while (remaining != 0) {
    remaining &= ~reach(g, std::countr_zero(remaining), g.all_vertices());
    ++count;
  }
  return count;
}

bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (int start = 0; start < n; ++start) {
    if (side[start] >= 0) continue;
    side[start] = 0;
    std::vector<int> queue{start};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int w = 0; w < n; ++w) {
        if (!g.adjacent(u, w)) continue;
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

VertexSet cut_vertices(const Graph& g) {
  VertexSet cuts = 0;
  const VertexSet all = g.all_vertices();
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet nbrs = g.neighbors(v);
    if (std::popcount(nbrs) < 2) continue;
    const VertexSet rest = all & ~vertex_bit(v);
    const VertexSet reached = reach(g, std::countr_zero(nbrs), rest);
    if ((nbrs & ~reached) != 0) cuts |= vertex_bit(v);
  }
  return cuts;
}

int chromatic_number(const Graph& g) {
  const int n = g.order();
  if (n > kChromaticMaxVertices) {
    throw std::length_error("exact chromatic number limited to 16 vertices");
  }
  if (g.edge_count() == 0) return 1;
  const int lower = max_clique_size(g, g.all_vertices(), 0, 0);
  int upper = 0;
  greedy_coloring(g, upper);
  if (lower == upper) return lower;

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  for (int k = lower; k < upper; ++k) {
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    if (extend_coloring(g, order, 0, k, -1, color)) return k;
  }
  return upper;
}

int das_edge_bound(const Graph& g) {
  const auto edges = g.edges();
  if (edges.empty()) throw std::invalid_argument("edge bound needs at least one edge");
  int best = 0;
  for (const auto& [u, v] : edges) {
    const int common = std::popcount(g.neighbors(u) & g.neighbors(v));
    best = std::max(best, g.degree(u) + g.degree(v) - common);
  }
  return best;
}

}  // namespace lapgirth
