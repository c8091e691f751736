#include "lapgirth/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "lapgirth/canonical.hpp"
#include "lapgirth/invariants.hpp"
#include "lapgirth/parallel.hpp"

namespace lapgirth {

namespace {

// (degree, neighbour degrees descending), packed four bits per entry.
std::uint64_t vertex_key(const Graph& g, int v) {
  int nd[Graph::kMaxVertices];
  int count = 0;
  for (VertexSet rest = g.neighbors(v); rest != 0; rest &= rest - 1) {
    nd[count++] = g.degree(std::countr_zero(rest));
  }
  std::sort(nd, nd + count, std::greater<>());
  std::uint64_t key = static_cast<std::uint64_t>(count) << 32;
  for (int i = 0; i < count; ++i) key |= static_cast<std::uint64_t>(nd[i]) << (28 - 4 * i);
  return key;
}

struct Child {
  CanonicalForm form;
  Graph graph;
};

std::vector<Child> augment(const Graph& parent) {
  const int m = parent.order();
  const int fresh = m;
  std::set<CanonicalForm> seen;
  std::vector<Child> out;
  for (VertexSet subset = 1; subset <= parent.all_vertices(); ++subset) {
    const Graph child = parent.with_vertex(subset);
    const VertexSet non_cut = child.all_vertices() & ~cut_vertices(child);

    std::uint64_t best_key = 0;
    for (VertexSet rest = non_cut; rest != 0; rest &= rest - 1) {
      best_key = std::max(best_key, vertex_key(child, std::countr_zero(rest)));
    }
    if (vertex_key(child, fresh) != best_key) continue;
    VertexSet candidates = 0;
    for (VertexSet rest = non_cut; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (vertex_key(child, v) == best_key) candidates |= vertex_bit(v);
    }

    CanonicalLabeling lab = canonical_labeling(child);
    if (candidates != vertex_bit(fresh)) {
      int designated = -1;
      for (VertexSet rest = candidates; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        if (designated < 0 || lab.position[v] > lab.position[designated]) designated = v;
      }
      if (designated != fresh &&
          canonical_labeling(child, fresh).form != canonical_labeling(child, designated).form) {
        continue;
      }
    }
    if (!seen.insert(lab.form).second) continue;
    out.push_back({std::move(lab.form), child.relabeled(lab.position)});
  }
  return out;
}

}  // namespace

std::vector<Graph> enumerate_connected(int n, int jobs) {
  if (n < 1 || n > kEnumerateMaxVertices) {
    throw std::invalid_argument("enumeration supports 1..9 vertices, got " + std::to_string(n));
  }
  std::vector<Graph> level{Graph(1)};
  for (int m = 2; m <= n; ++m) {
    std::vector<std::vector<Child>> per_parent(level.size());
    parallel_for(level.size(), jobs, [&](std::size_t i) { per_parent[i] = augment(level[i]); });
    std::vector<Child> children;
    for (auto& batch : per_parent) {
      std::move(batch.begin(), batch.end(), std::back_inserter(children));
    }
    std::sort(children.begin(), children.end(),
              [](const Child& a, const Child& b) { return a.form < b.form; });
    level.clear();
    level.reserve(children.size());
    for (auto& c : children) level.push_back(std::move(c.graph));
  }
  return level;
}

}  // namespace lapgirth
