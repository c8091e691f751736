#include "lapgirth/canonical.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace lapgirth {

namespace {

using Cells = std::vector<VertexSet>;

bool split_cell(const Graph& g, Cells& cells, std::size_t c, VertexSet splitter) {
  const VertexSet cell = cells[c];
  int counts[Graph::kMaxVertices + 1] = {};
  VertexSet by_count[Graph::kMaxVertices + 1] = {};
  int distinct = 0;
  for (VertexSet rest = cell; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const int k = std::popcount(g.neighbors(v) & splitter);
    if (counts[k]++ == 0) ++distinct;
    by_count[k] |= vertex_bit(v);
  }
  if (distinct < 2) return false;
  Cells pieces;
  for (int k = 0; k <= Graph::kMaxVertices; ++k) {
    if (by_count[k] != 0) pieces.push_back(by_count[k]);
  }
  cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
  cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
  return true;
}

// Coarsest equitable refinement; cell order depends only on the graph
// structure and the incoming cell order.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      const VertexSet splitter = cells[s];
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (std::popcount(cells[c]) > 1 && split_cell(g, cells, c, splitter)) {
          changed = true;
          break;
        }
      }
    }
  }
}

int target_cell(const Cells& cells) {
  int best = -1;
  int best_size = Graph::kMaxVertices + 1;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const int size = std::popcount(cells[c]);
    if (size > 1 && size < best_size) {
      best = static_cast<int>(c);
      best_size = size;
    }
  }
  return best;
}

int find(std::vector<int>& parent, int v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run(Cells cells) {
    descend(std::move(cells));
    CanonicalLabeling out;
    out.form = best_form_;
    out.position.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) out.position[best_lab_[i]] = i;
    return out;
  }

 private:
  // Returns -1 to continue normally, or the depth of the node whose
  // current child should be abandoned.
  int descend(Cells cells) {
    refine(g_, cells);
    const int target = target_cell(cells);
    if (target < 0) return leaf(cells);

    const int depth = static_cast<int>(path_.size());
    VertexSet explored = 0;
    for (VertexSet rest = cells[target]; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (explored != 0 && equivalent_to_explored(v, explored, depth)) continue;
      explored |= vertex_bit(v);

      Cells child = cells;
      child[target] &= ~vertex_bit(v);
      child.insert(child.begin() + target, vertex_bit(v));
      path_.push_back(v);
      const int jump = descend(std::move(child));
      path_.pop_back();
      if (jump >= 0 && jump < depth) return jump;
    }
    return -1;
  }

  int leaf(const Cells& cells) {
    std::vector<int> lab(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) lab[i] = std::countr_zero(cells[i]);
    CanonicalForm form = encode(lab);
    if (!have_best_ || form < best_form_) {
      have_best_ = true;
      best_form_ = std::move(form);
      best_lab_ = std::move(lab);
      best_path_ = path_;
      return -1;
    }
    if (form == best_form_) {
      std::vector<int> gamma(static_cast<std::size_t>(n_));
      for (int i = 0; i < n_; ++i) gamma[best_lab_[i]] = lab[i];
      automorphisms_.push_back(std::move(gamma));
      std::size_t d = 0;
      while (d < path_.size() && d < best_path_.size() && path_[d] == best_path_[d]) ++d;
      return static_cast<int>(d);
    }
    return -1;
  }

  CanonicalForm encode(const std::vector<int>& lab) const {
    CanonicalForm form;
    form.order = n_;
    form.rows.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
      const VertexSet nbrs = g_.neighbors(lab[i]);
      std::uint64_t row = 0;
      for (int j = i + 1; j < n_; ++j) {
        if ((nbrs >> lab[j]) & 1U) row |= std::uint64_t{1} << (63 - j);
      }
      form.rows[i] = row;
    }
    return form;
  }

  // v lies in the orbit of an explored sibling under the automorphisms
  // found so far that fix the current path pointwise.
  bool equivalent_to_explored(int v, VertexSet explored, int depth) {
    if (automorphisms_.empty()) return false;
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    bool any = false;
    for (const auto& gamma : automorphisms_) {
      bool fixes = true;
      for (int d = 0; d < depth && fixes; ++d) fixes = gamma[path_[d]] == path_[d];
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n_; ++x) {
        const int a = find(parent, x);
        const int b = find(parent, gamma[x]);
        if (a != b) parent[a] = b;
      }
    }
    if (!any) return false;
    const int root = find(parent, v);
    for (VertexSet rest = explored; rest != 0; rest &= rest - 1) {
      if (find(parent, std::countr_zero(rest)) == root) return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<int> path_;
  bool have_best_ = false;
  CanonicalForm best_form_;
  std::vector<int> best_lab_;
  std::vector<int> best_path_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

std::string CanonicalForm::bytes() const {
  std::string out;
  int acc = 0;
  int filled = 0;
  for (int i = 0; i < order; ++i) {
    for (int j = i + 1; j < order; ++j) {
      acc = (acc << 1) | static_cast<int>((rows[i] >> (63 - j)) & 1U);
      if (++filled == 8) {
        out.push_back(static_cast<char>(acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(acc << (8 - filled)));
  return out;
}

CanonicalLabeling canonical_labeling(const Graph& g, int marked) {
  if (g.order() > kCanonicalMaxVertices) {
    throw std::length_error("canonical labeling limited to 12 vertices");
  }
  Cells cells;
  if (marked >= 0) {
    if (marked >= g.order()) throw std::out_of_range("marked vertex out of range");
    cells.push_back(vertex_bit(marked));
    const VertexSet rest = g.all_vertices() & ~vertex_bit(marked);
    if (rest != 0) cells.push_back(rest);
  } else {
    cells.push_back(g.all_vertices());
  }
  return Search(g).run(std::move(cells));
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph canonical_graph(const Graph& g) { return g.relabeled(canonical_labeling(g).position); }

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() &&
         canonical_form(a) == canonical_form(b);
}

}  // namespace lapgirth
