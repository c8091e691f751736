#include "lapgirth/families.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lapgirth {

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs at least 1 vertex");
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_multipartite(std::span<const int> parts) {
  if (parts.empty()) throw std::invalid_argument("complete multipartite graph needs a part");
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] < 1) throw std::invalid_argument("part sizes must be positive");
    part_of.insert(part_of.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
    if (part_of.size() > static_cast<std::size_t>(Graph::kMaxVertices)) {
      throw std::invalid_argument("complete multipartite graph exceeds 64 vertices");
    }
  }
  const int n = static_cast<int>(part_of.size());
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
    }
  }
  return g;
}

Graph u_t(int cycle_length, int pendants) {
  if (cycle_length < 3) throw std::invalid_argument("U_t needs a cycle of length >= 3");
  if (pendants < 0) throw std::invalid_argument("pendant count must be non-negative");
  Graph g(cycle_length + pendants);
  for (int v = 0; v < cycle_length; ++v) g.add_edge(v, (v + 1) % cycle_length);
  for (int p = 0; p < pendants; ++p) g.add_edge(0, cycle_length + p);
  return g;
}

Graph gadget_graph(Gadget which) {
  // (cycle length, cycle label of v's attachment); u always hangs off label 0.
  int length = 0;
  int v_anchor = 0;
  switch (which) {
    case Gadget::G1: length = 6; v_anchor = 3; break;
    case Gadget::G2: length = 5; v_anchor = 2; break;
    case Gadget::G3: length = 4; v_anchor = 1; break;
    case Gadget::G4: length = 4; v_anchor = 2; break;
  }
  Graph g(length + 2);
  for (int v = 0; v < length; ++v) g.add_edge(v, (v + 1) % length);
  const int u = length;
  const int v = length + 1;
  g.add_edge(u, v);
  g.add_edge(u, 0);
  g.add_edge(v, v_anchor);
  return g;
}

Gadget parse_gadget(std::string_view name) {
  std::string upper(name);
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "G1") return Gadget::G1;
  if (upper == "G2") return Gadget::G2;
  if (upper == "G3") return Gadget::G3;
  if (upper == "G4") return Gadget::G4;
  throw std::invalid_argument("unknown gadget '" + std::string(name) + "', expected G1..G4");
}

}  // namespace lapgirth
