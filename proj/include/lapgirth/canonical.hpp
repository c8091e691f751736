#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "lapgirth/graph.hpp"

namespace lapgirth {

inline constexpr int kCanonicalMaxVertices = 12;

// Upper triangle of the canonically relabeled adjacency matrix. Row i
// holds columns j > i, column j at bit 63 - j, so comparing rows as
// integers compares the row-major upper-triangle bit string.
struct CanonicalForm {
  int order = 0;
  std::vector<std::uint64_t> rows;

  // Upper triangle packed eight bits per byte, row-major.
  std::string bytes() const;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<int> position;  // position[v] = canonical index of vertex v
};

// Minimum form over the leaves of an individualization-refinement search
// (equitable refinement, first smallest non-singleton target cell), with
// branches pruned by automorphisms discovered along the way. When `marked`
// is a vertex, it is placed in a cell of its own ahead of the others, so
// two markings give equal forms iff an automorphism maps one marked vertex
// to the other. Throws std::length_error above 12 vertices.
CanonicalLabeling canonical_labeling(const Graph& g, int marked = -1);

CanonicalForm canonical_form(const Graph& g);

// g relabeled by its canonical labeling.
Graph canonical_graph(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace lapgirth
