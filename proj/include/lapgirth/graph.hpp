#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace lapgirth {

using VertexSet = std::uint64_t;

inline constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }

// Undirected simple graph on vertices 0..n-1, adjacency stored as one
// 64-bit row per vertex.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  // Edgeless graph on n vertices. Throws std::invalid_argument unless
  // 1 <= n <= 64.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  VertexSet all_vertices() const;
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  int max_degree() const;
  int edge_count() const;
  std::vector<int> degrees() const;
  std::vector<std::pair<int, int>> edges() const;

  // Throws std::invalid_argument for loops or out-of-range endpoints.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  Graph without_edge(int u, int v) const;

  // Induced subgraph; vertex vertices[i] becomes vertex i.
  Graph induced(std::span<const int> vertices) const;

  // Vertex v of this graph becomes vertex new_label[v].
  Graph relabeled(std::span<const int> new_label) const;

  // Appends one vertex adjacent to `neighbors`.
  Graph with_vertex(VertexSet neighbors) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  std::vector<VertexSet> adj_;
};

// Length of a shortest cycle, or infinite for forests.
class Girth {
 public:
  static Girth infinite() { return Girth(); }
  static Girth finite(int length);

  bool is_finite() const { return value_.has_value(); }
  // Throws std::logic_error for an infinite girth.
  int value() const;

  friend bool operator==(const Girth&, const Girth&) = default;

 private:
  Girth() = default;
  std::optional<int> value_;
};

}  // namespace lapgirth
