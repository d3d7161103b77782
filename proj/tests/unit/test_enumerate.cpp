#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <map>
#include <numeric>

#include "coverlab/enumerate.hpp"
#include "coverlab/errors.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace coverlab;

TEST_CASE("number of isomorphism classes") {
  // Unlabeled simple graphs, OEIS A000088.
  const std::vector<std::size_t> expected = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 0; n <= 8; ++n) CHECK(isomorphism_classes(n).size() == expected[n]);
}

TEST_CASE("canonical codes partition like the permutation minimum") {
  for (int n = 1; n <= 6; ++n) {
    std::map<std::uint64_t, std::uint64_t> brute_to_fast, fast_to_brute;
    GraphEnumeration spec;
    spec.n = n;
    enumerate_graphs(spec, [&](const SimpleGraph& g) {
      const std::uint64_t brute = oracle::brute_canonical(g), fast = canonical_code(g);
      CHECK(brute_to_fast.emplace(brute, fast).first->second == fast);
      CHECK(fast_to_brute.emplace(fast, brute).first->second == brute);
    });
    CHECK(brute_to_fast.size() == isomorphism_classes(n).size());
  }
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 5 + trial % 6;
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) edges.emplace_back(u, v);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> moved;
    for (const Edge& e : edges) moved.emplace_back(perm[e.u], perm[e.v]);
    const SimpleGraph a = SimpleGraph::from_edges(n, edges), b = SimpleGraph::from_edges(n, moved);
    CHECK(isomorphic(a, b));
    CHECK(canonical_form(a) == canonical_form(b));
  }
  CHECK_FALSE(isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
}

TEST_CASE("labeled enumeration") {
  GraphEnumeration spec;
  spec.n = 4;
  CHECK(enumerate_graphs(spec).size() == 64);
  spec.no_isolated = true;
  spec.unmixed_only = true;
  for (const SimpleGraph& g : enumerate_graphs(spec)) CHECK(g.isolated_vertices().empty());
  spec.n = 11;
  CHECK_THROWS_AS(enumerate_graphs(spec), ResourceError);
}

TEST_CASE("filters") {
  GraphEnumeration spec;
  spec.n = 6;
  spec.dedup_isomorphic = true;
  spec.bipartite_only = true;
  for (const SimpleGraph& g : enumerate_graphs(spec)) CHECK(is_bipartite(g));
  spec.bipartite_only = false;
  spec.konig_only = true;
  spec.unmixed_only = true;
  CHECK_FALSE(enumerate_graphs(spec).empty());
}

TEST_CASE("order caps") {
  CHECK_THROWS_AS(isomorphism_classes(kMaxDedupOrder + 1), ResourceError);
  CHECK_THROWS_AS(canonical_code(SimpleGraph(kMaxCanonicalOrder + 1)), ResourceError);
}
