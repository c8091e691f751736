#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "lapgirth/canonical.hpp"
#include "lapgirth/families.hpp"
#include "oracles.hpp"

using namespace lapgirth;

TEST_CASE("canonical form examples") {
  const std::vector<int> k22{2, 2};
  CHECK(canonical_form(cycle(4)) == canonical_form(complete_multipartite(k22)));
  CHECK(canonical_form(path(3)) != canonical_form(complete(3)));
  std::mt19937 rng(67);
  const Graph u = u_t(4, 1);
  const CanonicalForm base = canonical_form(u);
  for (int i = 0; i < 20; ++i) CHECK(canonical_form(oracle::random_relabel(u, rng)) == base);
  CHECK_THROWS_AS(canonical_form(Graph(13)), std::length_error);
}

TEST_CASE("canonical labeling produces the canonical graph") {
  std::mt19937 rng(71);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_graph(1 + i % 12, 0.35, rng);
    const CanonicalLabeling lab = canonical_labeling(g);
    const Graph c = g.relabeled(lab.position);
    CHECK(c == canonical_graph(g));
    CHECK(canonical_form(c) == lab.form);
    // The canonical graph's own form is read straight off its matrix.
    for (int r = 0; r < c.order(); ++r) {
      std::uint64_t row = 0;
      for (int col = r + 1; col < c.order(); ++col) {
        if (c.adjacent(r, col)) row |= std::uint64_t{1} << (63 - col);
      }
      CHECK(lab.form.rows[r] == row);
    }
  }
}

TEST_CASE("forms agree exactly when brute-force minimal forms agree") {
  // Every labeled graph on up to 5 vertices.
  for (int n = 1; n <= 5; ++n) {
    const int edges = n * (n - 1) / 2;
    std::map<std::string, CanonicalForm> by_brute;
    std::set<CanonicalForm> seen_forms;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges); ++mask) {
      const Graph g = oracle::from_mask(n, mask);
      const std::string brute = oracle::brute_canonical(g);
      const CanonicalForm form = canonical_form(g);
      auto [it, inserted] = by_brute.emplace(brute, form);
      if (!inserted) CHECK(it->second == form);
      seen_forms.insert(form);
    }
    CHECK(seen_forms.size() == by_brute.size());
  }
}

TEST_CASE("random pairs on 6 and 7 vertices") {
  std::mt19937 rng(73);
  int iso_pairs = 0;
  for (int i = 0; i < 400; ++i) {
    const int n = 6 + i % 2;
    const Graph a = oracle::random_graph(n, 0.5, rng);
    const Graph b = i % 3 == 0 ? oracle::random_relabel(a, rng) : oracle::random_graph(n, 0.5, rng);
    const bool same = oracle::brute_canonical(a) == oracle::brute_canonical(b);
    iso_pairs += same ? 1 : 0;
    CHECK(isomorphic(a, b) == same);
  }
  CHECK(iso_pairs >= 100);
}

TEST_CASE("marked vertices separate orbits") {
  // In u_t(5, 1) the orbits are {0}, {1, 4}, {2, 3}, {5}.
  const Graph g = u_t(5, 1);
  auto form = [&](int v) { return canonical_labeling(g, v).form; };
  CHECK(form(1) == form(4));
  CHECK(form(2) == form(3));
  CHECK(form(1) != form(2));
  CHECK(form(0) != form(5));
  CHECK(form(0) != form(1));
  // Vertex-transitive graph: every marking gives the same form.
  const Graph c = cycle(7);
  for (int v = 1; v < 7; ++v) CHECK(canonical_labeling(c, v).form == canonical_labeling(c, 0).form);
}

TEST_CASE("highly symmetric graphs") {
  std::mt19937 rng(79);
  Graph petersen(10);
  for (int i = 0; i < 5; ++i) {
    petersen.add_edge(i, (i + 1) % 5);
    petersen.add_edge(i, i + 5);
    petersen.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  const std::vector<int> k444{4, 4, 4};
  for (const Graph& g : {petersen, complete(12), Graph(12), cycle(12), complete_multipartite(k444)}) {
    const CanonicalForm f = canonical_form(g);
    for (int i = 0; i < 10; ++i) CHECK(canonical_form(oracle::random_relabel(g, rng)) == f);
  }
}
