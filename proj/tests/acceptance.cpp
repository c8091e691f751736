// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// all pass. Set LAPGIRTH_JOBS to control parallelism.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lapgirth/canonical.hpp"
#include "lapgirth/cli.hpp"
#include "lapgirth/enumerate.hpp"
#include "lapgirth/families.hpp"
#include "lapgirth/gadget.hpp"
#include "lapgirth/graph6.hpp"
#include "lapgirth/int_matrix.hpp"
#include "lapgirth/invariants.hpp"
#include "lapgirth/jacobi.hpp"
#include "lapgirth/parallel.hpp"
#include "lapgirth/scan.hpp"
#include "lapgirth/spectra.hpp"
#include "lapgirth/theorems.hpp"
#include "oracles.hpp"

using namespace lapgirth;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Shared corpus: connected graphs on 1..8 vertices, built once.
struct Corpus {
  std::vector<std::vector<Graph>> by_order;  // index n
  std::vector<Graph> all;
  std::vector<Graph> up_to_7;
};

const Corpus& corpus() {
  static const Corpus c = [] {
    Corpus out;
    out.by_order.resize(9);
    const int jobs = default_jobs();
    for (int n = 1; n <= 8; ++n) {
      out.by_order[n] = enumerate_connected(n, jobs);
      for (const auto& g : out.by_order[n]) {
        out.all.push_back(g);
        if (n <= 7) out.up_to_7.push_back(g);
      }
    }
    return out;
  }();
  return c;
}

// Connected labeled graphs on n vertices, deduplicated by canonical form.
std::size_t brute_force_count(int n, int jobs) {
  const int edges = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << edges;
  const std::size_t chunks = 256;
  std::vector<std::set<CanonicalForm>> partial(chunks);
  parallel_for(chunks, jobs, [&](std::size_t chunk) {
    for (std::uint64_t mask = chunk; mask < total; mask += chunks) {
      const Graph g = oracle::from_mask(n, mask);
      if (oracle::connected(g)) partial[chunk].insert(canonical_form(g));
    }
  });
  std::set<CanonicalForm> all;
  for (auto& s : partial) all.merge(s);
  return all.size();
}

Outcome criterion_1() {
  Outcome out;
  const int jobs = default_jobs();
  const std::size_t expected[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};
  std::ostringstream detail;
  for (int n = 1; n <= 8; ++n) {
    const std::size_t got = corpus().by_order[n].size();
    if (got != expected[n]) {
      out.pass = false;
      detail << "n=" << n << " enumerated " << got << " expected " << expected[n] << "; ";
    }
  }
  for (int n = 1; n <= 7; ++n) {
    const std::size_t brute = brute_force_count(n, jobs);
    if (brute != corpus().by_order[n].size()) {
      out.pass = false;
      detail << "n=" << n << " brute force " << brute << " vs enumerated " << corpus().by_order[n].size() << "; ";
    }
  }

  std::ostringstream cli_out;
  std::ostringstream cli_err;
  const int code = cli::run({"verify", "--nmax", "8", "--skip-lemmas"}, cli_out, cli_err);
  const ScanReport report = scan_corpus(corpus().all, {jobs, false});
  int theorem_checked = 0;
  for (const auto& r : report.records) {
    if (r.classification != Classification::Cycle && r.classification != Classification::Acyclic &&
        r.classification != Classification::C3) {
      ++theorem_checked;
    }
  }
  const auto violations = report.violations();
  if (code != cli::kExitOk || !violations.empty() || !report.errors.empty() ||
      report.records.size() != corpus().all.size()) {
    out.pass = false;
    detail << "cli exit " << code << ", " << violations.size() << " violations, " << report.errors.size()
           << " errors; ";
  }
  detail << report.records.size() << " graphs (1,1,2,6,21,112,853,11117), " << theorem_checked
         << " non-cycle graphs with finite girth checked, " << violations.size() << " violations";
  out.detail = detail.str();
  return out;
}

Outcome criterion_2() {
  Outcome out;
  const ScanReport report = scan_corpus(corpus().all, {default_jobs(), false});
  std::set<std::string> got;
  for (const auto& [name, keys] : report.equality_cases()) got.insert(keys.begin(), keys.end());

  const std::vector<int> k32{3, 2};
  std::set<std::string> want{to_graph6(canonical_graph(cycle(3))),
                             to_graph6(canonical_graph(complete_multipartite(k32)))};
  for (int g = 4; g <= 7; ++g) want.insert(to_graph6(canonical_graph(u_t(g, 1))));

  std::ostringstream detail;
  if (got != want) {
    out.pass = false;
    detail << "equality set has " << got.size() << " graphs, expected " << want.size() << "; ";
  }
  const auto t = report.triangle_with_pendant();
  if (!t || t->graph6 != to_graph6(canonical_graph(u_t(3, 1)))) {
    out.pass = false;
    detail << "triangle with pendant not reported; ";
  } else {
    detail << "u_t(3,1) " << t->graph6 << ": m(n,n] = " << *t->count << ", bound " << *t->bound
           << ", equality " << (t->equality ? "yes" : "no") << " (mu_1 = 4 exactly, multiplicity "
           << ExactLaplacianSpectrum(u_t(3, 1)).multiplicity(4) << "); ";
  }
  // The classifier and the exact counts are independent; the only allowed
  // disagreement is that graph.
  for (const auto& r : report.classifier_mismatches()) {
    if (!t || r.graph6 != t->graph6) {
      out.pass = false;
      detail << "classifier mismatch " << r.graph6 << "; ";
    }
  }
  const auto eq = report.equality_cases();
  detail << "equality cases C3=" << eq.at("C3").size() << " K32=" << eq.at("K32").size()
         << " U1=" << eq.at("U1").size() << " Other=" << eq.at("Other").size();
  out.detail = detail.str();
  return out;
}

Outcome criterion_3() {
  Outcome out;
  std::ostringstream detail;
  int exact_checked = 0;
  for (int n = 3; n <= 64; ++n) {
    // (3, 3] is empty for the triangle.
    const int exact = n > 3 ? m_interval(cycle(n), 3, n).count() : 0;
    ++exact_checked;
    if (exact != remark_cycle_count(n)) {
      out.pass = false;
      detail << "n=" << n << " exact " << exact << " formula " << remark_cycle_count(n) << "; ";
    }
  }
  for (int n = 3; n <= 500; ++n) {
    if (cycle_count_by_enumeration(n) != remark_cycle_count(n)) {
      out.pass = false;
      detail << "n=" << n << " closed-form count " << cycle_count_by_enumeration(n) << "; ";
    }
  }
  detail << "exact engine n=3..64 (" << exact_checked << " cycles), closed-form count n=3..500";
  out.detail = detail.str();
  return out;
}

double max_multiset_gap(const ClosedFormSpectrum& s, const Graph& g) {
  const auto closed = s.values_descending();
  const auto numeric = laplacian_eigenvalues(g);
  if (closed.size() != numeric.size()) return INFINITY;
  double gap = 0.0;
  for (std::size_t i = 0; i < closed.size(); ++i) gap = std::max(gap, std::abs(closed[i] - numeric[i]));
  return gap;
}

Outcome criterion_4() {
  constexpr double kTol = 1e-8;
  Outcome out;
  std::ostringstream detail;
  double worst = 0.0;
  int families = 0;
  auto check = [&](const ClosedFormSpectrum& s, const Graph& g, const std::string& name) {
    const double gap = max_multiset_gap(s, g);
    worst = std::max(worst, gap);
    ++families;
    if (!(gap <= kTol)) {
      out.pass = false;
      detail << name << " gap " << gap << "; ";
    }
  };
  for (int n = 1; n <= 64; ++n) {
    if (n >= 3) check(cycle_spectrum(n), cycle(n), "C" + std::to_string(n));
    check(path_spectrum(n), path(n), "P" + std::to_string(n));
  }
  // Every two-part split of every order, plus the complete graph and a
  // spread of multipart shapes.
  for (int n = 2; n <= 64; ++n) {
    for (int r = 1; r <= n / 2; ++r) {
      const std::vector<int> parts{r, n - r};
      check(multipartite_spectrum(parts), complete_multipartite(parts), "K2part");
    }
    const std::vector<int> ones(static_cast<std::size_t>(n), 1);
    check(multipartite_spectrum(ones), complete(n), "K" + std::to_string(n));
  }
  std::mt19937 rng(97);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> parts;
    int total = 0;
    const int target = 3 + static_cast<int>(rng() % 62);
    while (true) {
      const int r = 1 + static_cast<int>(rng() % 8);
      if (total + r > target) break;
      parts.push_back(r);
      total += r;
    }
    if (parts.size() < 2) continue;
    check(multipartite_spectrum(parts), complete_multipartite(parts), "Kmulti");
  }

  const std::vector<int> k32{3, 2};
  const Graph k = complete_multipartite(k32);
  const ExactLaplacianSpectrum exact(k);
  const bool spectrum_ok = exact.multiplicity(0) == 1 && exact.multiplicity(2) == 2 && exact.multiplicity(3) == 1 &&
                           exact.multiplicity(5) == 1 && exact.count(-1, 6) == 5;
  const int m45 = exact.count(4, 5);
  if (!spectrum_ok || m45 != 1) {
    out.pass = false;
    detail << "K_{3,2} exact spectrum wrong; ";
  }
  detail << families << " closed forms, worst gap " << worst << "; K_{3,2} exact {0,2,2,3,5}: "
         << (spectrum_ok ? "yes" : "no") << ", m(4,5] = " << m45;
  out.detail = detail.str();
  return out;
}

Outcome criterion_5() {
  constexpr double kTol = 1e-9;
  Outcome out;
  std::ostringstream detail;
  const ScanReport report = scan_corpus(corpus().up_to_7, {default_jobs(), true});
  if (!report.lemma_failures.empty() || !report.errors.empty()) {
    out.pass = false;
    for (const auto& f : report.lemma_failures) detail << f.graph6 << ":" << f.lemma << " ";
  }
  detail << report.records.size() << " graphs, " << report.lemma_failures.size() << " lemma failures; ";

  std::mt19937 rng(101);
  int cauchy_fail = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 15;
    const IntegerSymMatrix a(oracle::random_symmetric(n, -10, 10, rng));
    std::vector<int> keep(n);
    std::iota(keep.begin(), keep.end(), 0);
    std::shuffle(keep.begin(), keep.end(), rng);
    const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    keep.resize(m);
    std::sort(keep.begin(), keep.end());
    const auto big = numeric_eigenvalues(a);
    const auto small = numeric_eigenvalues(a.principal_submatrix(keep));
    bool ok = true;
    for (int i = 0; i < m; ++i) ok = ok && big[i] >= small[i] - kTol && small[i] >= big[i + n - m] - kTol;
    cauchy_fail += ok ? 0 : 1;
  }
  int weyl_fail = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 15;
    const IntegerSymMatrix a(oracle::random_symmetric(n, -10, 10, rng));
    const IntegerSymMatrix b(oracle::random_symmetric(n, -10, 10, rng));
    const auto ea = numeric_eigenvalues(a);
    const auto eb = numeric_eigenvalues(b);
    const auto es = numeric_eigenvalues(a + b);
    bool ok = true;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; i + j - 1 <= n; ++j) ok = ok && es[i + j - 2] <= ea[i - 1] + eb[j - 1] + kTol;
    }
    weyl_fail += ok ? 0 : 1;
  }
  if (cauchy_fail != 0 || weyl_fail != 0) out.pass = false;
  detail << "Cauchy 200 instances, " << cauchy_fail << " failures; Weyl 200 instances, " << weyl_fail
         << " failures";
  out.detail = detail.str();
  return out;
}

Outcome criterion_6() {
  Outcome out;
  std::ostringstream detail;
  double worst = 0.0;
  double min_slack = INFINITY;
  for (int a = 1; a <= 100; ++a) {
    for (int g : {3, 4, 5, 8}) {
      const Rho2Comparison r = rho2_case2_gadget(a, g);
      const double gap = std::abs(r.closed_form - r.numeric);
      worst = std::max(worst, gap);
      min_slack = std::min(min_slack, r.slack);
      if (!(gap <= 1e-10) || r.slack < 0.0) {
        out.pass = false;
        detail << "a=" << a << " g=" << g << " gap " << gap << " slack " << r.slack << "; ";
      }
    }
  }
  const double f1 = pendant_slack(1);
  if (f1 != 0.0) {
    out.pass = false;
    detail << "f(1) = " << f1 << "; ";
  }
  detail << "a=1..100, worst gap " << worst << ", min f " << min_slack << ", f(1) = " << f1;
  out.detail = detail.str();
  return out;
}

Outcome criterion_7() {
  Outcome out;
  const auto& graphs = corpus().up_to_7;
  std::vector<int> disagreements(graphs.size(), 0);
  std::vector<int> intervals(graphs.size(), 0);
  std::vector<int> resolved(graphs.size(), 0);
  parallel_for(graphs.size(), default_jobs(), [&](std::size_t i) {
    const Graph& g = graphs[i];
    const int n = g.order();
    const ExactLaplacianSpectrum exact(g);
    const std::vector<double> numeric = laplacian_eigenvalues(g);
    for (int a = 0; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        ++intervals[i];
        const HybridCount h = hybrid_interval_count(exact, numeric, a, b);
        resolved[i] += h.resolved_exactly;
        if (h.count != exact.count(a, b)) ++disagreements[i];
      }
    }
  });
  const int total_dis = std::accumulate(disagreements.begin(), disagreements.end(), 0);
  const int total_int = std::accumulate(intervals.begin(), intervals.end(), 0);
  const int total_res = std::accumulate(resolved.begin(), resolved.end(), 0);
  out.pass = total_dis == 0;
  std::ostringstream detail;
  detail << graphs.size() << " graphs, " << total_int << " intervals, " << total_res
         << " endpoint eigenvalues re-resolved exactly, " << total_dis << " disagreements";
  out.detail = detail.str();
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "exhaustive girth bound verification, n <= 8", criterion_1},
      {2, "equality characterization", criterion_2},
      {3, "cycle count formula", criterion_3},
      {4, "closed-form spectra vs numeric solver", criterion_4},
      {5, "lemma suites and interlacing/Weyl", criterion_5},
      {6, "pendant perturbation closed form", criterion_6},
      {7, "exact vs numeric interval counts", criterion_7},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d: %s -- %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                secs);
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
