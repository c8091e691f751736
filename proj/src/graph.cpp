#include "lapgirth/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lapgirth {

Graph::Graph(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count must be in 1..64, got " +
                                std::to_string(n));
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

VertexSet Graph::all_vertices() const {
  const int n = order();
  return n == 64 ? ~VertexSet{0} : (vertex_bit(n) - 1);
}

int Graph::max_degree() const {
  int best = 0;
  for (VertexSet row : adj_) best = std::max(best, std::popcount(row));
  return best;
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet row : adj_) twice += std::popcount(row);
  return twice / 2;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out;
  out.reserve(adj_.size());
  for (VertexSet row : adj_) out.push_back(std::popcount(row));
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u) {
    VertexSet higher = adj_[u] & ~((vertex_bit(u) << 1) - 1);
    while (higher != 0) {
      const int v = std::countr_zero(higher);
      higher &= higher - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order()) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range for order " +
                                std::to_string(order()));
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  adj_[u] |= vertex_bit(v);
  adj_[v] |= vertex_bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~vertex_bit(v);
  adj_[v] &= ~vertex_bit(u);
}

Graph Graph::without_edge(int u, int v) const {
  Graph g = *this;
  g.remove_edge(u, v);
  return g;
}

Graph Graph::induced(std::span<const int> vertices) const {
  Graph g(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(vertices[i]);
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j]) {
        throw std::invalid_argument("repeated vertex in induced subgraph");
      }
      if (adjacent(vertices[i], vertices[j])) {
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return g;
}

Graph Graph::relabeled(std::span<const int> new_label) const {
  if (static_cast<int>(new_label.size()) != order()) {
    throw std::invalid_argument("relabeling has wrong length");
  }
  Graph g(order());
  for (const auto& [u, v] : edges()) g.add_edge(new_label[u], new_label[v]);
  return g;
}

Graph Graph::with_vertex(VertexSet neighbors) const {
  const int n = order();
  if ((neighbors & ~all_vertices()) != 0) {
    throw std::invalid_argument("neighbor set references missing vertices");
  }
  Graph g(n + 1);
  for (int v = 0; v < n; ++v) g.adj_[v] = adj_[v];
  g.adj_[n] = neighbors;
  while (neighbors != 0) {
    const int v = std::countr_zero(neighbors);
    neighbors &= neighbors - 1;
    g.adj_[v] |= vertex_bit(n);
  }
  return g;
}

Girth Girth::finite(int length) {
  if (length < 3) throw std::invalid_argument("girth must be at least 3");
  Girth g;
  g.value_ = length;
  return g;
}

int Girth::value() const {
  if (!value_) throw std::logic_error("girth is infinite");
  return *value_;
}

}  // namespace lapgirth
