#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lapgirth/graph.hpp"

namespace lapgirth {

enum class Classification { C3, K32, U1, Cycle, Other, Acyclic };

std::string_view to_string(Classification c);

// Outcome of the girth bound m_G(n - g + 3, n] <= n - g for one graph.
struct VerificationRecord {
  std::string graph6;
  int n = 0;
  Girth girth = Girth::infinite();
  std::optional<int> count;  // m_G(n - g + 3, n]; empty when acyclic
  std::optional<int> bound;  // n - g; empty when acyclic
  // Non-cycles: count <= bound. Cycles: count matches the closed-form
  // cycle count. Acyclic graphs: vacuously true.
  bool holds = true;
  bool equality = false;  // count == bound
  Classification classification = Classification::Other;
};

// Checks m_G(n - g + 3, n] <= n - g with exact counting. Throws
// std::invalid_argument for disconnected, acyclic or cycle graphs.
VerificationRecord theorem_up_check(const Graph& g);

// Record for any connected graph: cycles are checked against
// remark_cycle_count, acyclic graphs are recorded without a count.
// Throws std::invalid_argument for disconnected graphs.
VerificationRecord verification_record(const Graph& g);

// Structural classification, independent of spectra:
//   C3  - the triangle;
//   K32 - isomorphic to K_{3,2};
//   U1  - connected, degrees {3, 1, 2, ..., 2}, and removing the leaf
//         leaves a cycle;
//   Cycle, Acyclic, Other otherwise.
Classification classify_equality(const Graph& g);

// floor(2n/3) - ceil(n/3) + 1 if 3 does not divide n, else the same
// minus 2: the number of Laplacian eigenvalues of C_n above 3.
// Requires n >= 3.
int remark_cycle_count(int n);

// #{k in 1..n : n/3 < k < 2n/3}, counted directly.
int cycle_count_by_enumeration(int n);

// Shortest-cycle submatrix bound: with C the given shortest cycle of
// length g and H the principal submatrix of L(G) on C,
//   mu_(n-g+1)(G) <= rho_1(H) <= rho_1(L(C)) + rho_1(D),  rho_1(L(C)) <= 4,
// where D = diag(d(v_i) - 2). When no cycle vertex is adjacent to every
// vertex off the cycle, also rho_1(D) <= n - g - 1 and the chain closes at
// n - g + 3.
struct Case1Evaluation {
  double mu = 0.0;          // mu_(n-g+1)(G)
  double rho1_h = 0.0;
  double rho1_cycle = 0.0;
  double rho1_d = 0.0;
  bool hypothesis = false;  // no cycle vertex dominates G - C
  bool holds = false;
};

inline constexpr double kChainTolerance = 1e-9;

// Throws std::invalid_argument if `cycle` is not a shortest cycle of g or
// g is itself a cycle.
Case1Evaluation case1_gadget_check(const Graph& g, const std::vector<int>& cycle);

struct LemmaSuiteResult {
  bool edge_deletion_interlacing = true;
  // mu_1 >= Delta + 1, with equality exactly when Delta = n - 1.
  bool max_degree_bound = true;
  bool max_degree_equality = false;
  bool das_bound = true;
  // m_G(n - 1, n] <= chi - 1; empty above 16 vertices.
  std::optional<bool> chromatic_bound;

  bool all_passed() const;
  std::vector<std::pair<std::string, bool>> entries() const;
};

// Evaluates the four lemmas on a connected graph; the degree and chromatic
// statements use exact counting. Throws std::invalid_argument if g is
// disconnected.
LemmaSuiteResult lemma_suite(const Graph& g);

}  // namespace lapgirth
