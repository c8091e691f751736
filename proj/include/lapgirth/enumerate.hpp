#pragma once

#include <vector>

#include "lapgirth/graph.hpp"

namespace lapgirth {

inline constexpr int kEnumerateMaxVertices = 9;

// One canonically labeled representative of every isomorphism class of
// connected graphs on n vertices, sorted by canonical form.
//
// Canonical augmentation: each connected graph on n - 1 vertices is
// extended by a new vertex joined to every non-empty subset of its
// vertices. A child is kept only if the new vertex lies in the orbit of
// the child's designated vertex, the non-cut vertex of maximal
// (degree, sorted neighbour degrees) with the highest canonical position.
// Children of one parent that coincide up to isomorphism are merged.
// Throws std::invalid_argument unless 1 <= n <= 9.
std::vector<Graph> enumerate_connected(int n, int jobs = 1);

}  // namespace lapgirth
