#include "lapgirth/theorems.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "lapgirth/canonical.hpp"
#include "lapgirth/families.hpp"
#include "lapgirth/graph6.hpp"
#include "lapgirth/int_matrix.hpp"
#include "lapgirth/invariants.hpp"
#include "lapgirth/jacobi.hpp"
#include "lapgirth/spectra.hpp"

namespace lapgirth {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::C3: return "C3";
    case Classification::K32: return "K32";
    case Classification::U1: return "U1";
    case Classification::Cycle: return "Cycle";
    case Classification::Other: return "Other";
    case Classification::Acyclic: return "Acyclic";
  }
  return "Other";
}

VerificationRecord verification_record(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("graph is not connected");
  VerificationRecord rec;
  rec.graph6 = to_graph6(g);
  rec.n = g.order();
  rec.girth = girth(g);
  rec.classification = classify_equality(g);
  if (!rec.girth.is_finite()) return rec;

  const int n = rec.n;
  const int length = rec.girth.value();
  const int lower = n - length + 3;
  rec.bound = n - length;
  // (n, n] is empty, which covers every graph of girth 3.
  rec.count = lower >= n ? 0 : ExactLaplacianSpectrum(g).count(lower, n);
  rec.equality = *rec.count == *rec.bound;
  rec.holds = is_cycle_graph(g) ? *rec.count == remark_cycle_count(n) : *rec.count <= *rec.bound;
  return rec;
}

VerificationRecord theorem_up_check(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("graph is not connected");
  if (!girth(g).is_finite()) throw std::invalid_argument("graph is acyclic; the bound needs a finite girth");
  if (is_cycle_graph(g)) throw std::invalid_argument("graph is a cycle; use remark_cycle_count");
  return verification_record(g);
}

Classification classify_equality(const Graph& g) {
  const int n = g.order();
  if (!girth(g).is_finite()) return Classification::Acyclic;
  if (n == 3 && g.edge_count() == 3) return Classification::C3;
  if (is_cycle_graph(g)) return Classification::Cycle;
  if (n == 5 && g.edge_count() == 6) {
    static const std::array<int, 2> parts{3, 2};
    if (canonical_form(g) == canonical_form(complete_multipartite(parts))) return Classification::K32;
  }
  if (n >= 4 && is_connected(g)) {
    std::vector<int> deg = g.degrees();
    const auto leaf = std::find(deg.begin(), deg.end(), 1);
    std::vector<int> sorted = deg;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expected(static_cast<std::size_t>(n), 2);
    expected.front() = 1;
    expected.back() = 3;
    if (sorted == expected && leaf != deg.end()) {
      std::vector<int> rest;
      for (int v = 0; v < n; ++v) {
        if (v != leaf - deg.begin()) rest.push_back(v);
      }
      if (is_cycle_graph(g.induced(rest))) return Classification::U1;
    }
  }
  return Classification::Other;
}

int remark_cycle_count(int n) {
  if (n < 3) throw std::invalid_argument("cycle count needs n >= 3");
  const int floor_two_thirds = (2 * n) / 3;
  const int ceil_third = (n + 2) / 3;
  return n % 3 == 0 ? floor_two_thirds - ceil_third - 1 : floor_two_thirds - ceil_third + 1;
}

int cycle_count_by_enumeration(int n) {
  int count = 0;
  for (int k = 1; k <= n; ++k) {
    if (n < 3 * k && 3 * k < 2 * n) ++count;
  }
  return count;
}

Case1Evaluation case1_gadget_check(const Graph& g, const std::vector<int>& cyc) {
  const Girth gi = girth(g);
  if (!is_cycle_in(g, cyc) || !gi.is_finite() || static_cast<int>(cyc.size()) != gi.value()) {
    throw std::invalid_argument("supplied vertices are not a shortest cycle of the graph");
  }
  if (is_cycle_graph(g)) throw std::invalid_argument("graph is itself a cycle");
  const int n = g.order();
  const int length = static_cast<int>(cyc.size());

  Case1Evaluation out;
  const IntegerSymMatrix lap = laplacian(g);
  out.mu = numeric_eigenvalues(lap)[static_cast<std::size_t>(n - length)];

  const IntegerSymMatrix h = lap.principal_submatrix(cyc);
  const IntegerSymMatrix lc = laplacian(cycle(length));
  std::vector<long> excess;
  VertexSet on_cycle = 0;
  for (int v : cyc) {
    excess.push_back(g.degree(v) - 2);
    on_cycle |= vertex_bit(v);
  }
  const IntegerSymMatrix d = IntegerSymMatrix::diagonal(excess);
  const bool split_ok = h == lc + d;

  out.rho1_h = numeric_eigenvalues(h)[0];
  out.rho1_cycle = numeric_eigenvalues(lc)[0];
  out.rho1_d = static_cast<double>(*std::max_element(excess.begin(), excess.end()));

  const VertexSet outside = g.all_vertices() & ~on_cycle;
  out.hypothesis = std::none_of(cyc.begin(), cyc.end(),
                                [&](int v) { return (g.neighbors(v) & outside) == outside; });

  const double tol = kChainTolerance;
  out.holds = split_ok && out.mu <= out.rho1_h + tol && out.rho1_h <= out.rho1_cycle + out.rho1_d + tol &&
              out.rho1_cycle <= 4.0 + tol;
  if (out.hypothesis) {
    out.holds = out.holds && out.rho1_d <= n - length - 1 &&
                out.rho1_cycle + out.rho1_d <= n - length + 3 + tol;
  }
  return out;
}

bool LemmaSuiteResult::all_passed() const {
  return edge_deletion_interlacing && max_degree_bound && das_bound && chromatic_bound.value_or(true);
}

std::vector<std::pair<std::string, bool>> LemmaSuiteResult::entries() const {
  std::vector<std::pair<std::string, bool>> out{
      {"edge_deletion_interlacing", edge_deletion_interlacing},
      {"max_degree_bound", max_degree_bound},
      {"das_bound", das_bound},
  };
  if (chromatic_bound) out.emplace_back("chromatic_bound", *chromatic_bound);
  return out;
}

LemmaSuiteResult lemma_suite(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("graph is not connected");
  LemmaSuiteResult out;
  const int n = g.order();
  const ExactLaplacianSpectrum exact(g);
  const std::vector<double> mu = laplacian_eigenvalues(g);
  const double tol = kChainTolerance;

  for (const auto& [u, v] : g.edges()) {
    const std::vector<double> nu = laplacian_eigenvalues(g.without_edge(u, v));
    bool ok = std::abs(mu[n - 1]) <= tol && std::abs(nu[n - 1]) <= tol;
    for (int i = 0; i < n && ok; ++i) {
      ok = mu[i] >= nu[i] - tol && (i + 1 >= n || nu[i] >= mu[i + 1] - tol);
    }
    out.edge_deletion_interlacing = out.edge_deletion_interlacing && ok;
  }

  if (n >= 2) {
    const int delta = g.max_degree();
    const mpq_class target(delta + 1);
    // Every Laplacian eigenvalue is at most 2 * Delta < 2n, so (x, 2n] covers
    // everything above x without leaning on the sharper bound mu_1 <= n.
    const int above = exact.count(target, 2 * n);
    const int at = exact.multiplicity(target);
    out.max_degree_equality = above == 0 && at > 0;
    out.max_degree_bound = (above > 0 || at > 0) && out.max_degree_equality == (delta == n - 1);

    const int das = das_edge_bound(g);
    out.das_bound = exact.count(das, 2 * n) == 0;
  }

  if (n <= kChromaticMaxVertices) {
    const int top = n >= 2 ? exact.count(n - 1, n) : 0;
    out.chromatic_bound = top <= chromatic_number(g) - 1;
  }
  return out;
}

}  // namespace lapgirth
