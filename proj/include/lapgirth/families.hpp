#pragma once

#include <span>
#include <string_view>

#include "lapgirth/graph.hpp"

namespace lapgirth {

// Cycle v0 ~ v1 ~ ... ~ v(n-1) ~ v0. Requires n >= 3.
Graph cycle(int n);
// Path v0 ~ ... ~ v(n-1). Requires n >= 1.
Graph path(int n);
Graph complete(int n);

// K_{r1,...,rt}; part i occupies a contiguous block of labels in the
// order given.
Graph complete_multipartite(std::span<const int> parts);

// U_t: cycle on vertices 0..cycle_length-1 plus `pendants` leaves, all
// attached to vertex 0.
Graph u_t(int cycle_length, int pendants);

// The four graphs a shortest cycle plus two adjacent outside vertices u, v
// can induce when u and v have distinct single neighbours on the cycle.
// Labels: cycle vertices 0..g-1 (v1 is label 0), then u = g, v = g + 1.
enum class Gadget { G1, G2, G3, G4 };

Graph gadget_graph(Gadget which);

// Accepts "G1".."G4" (case-insensitive). Throws std::invalid_argument.
Gadget parse_gadget(std::string_view name);

}  // namespace lapgirth
