#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coverlab/covers.hpp"
#include "coverlab/errors.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace coverlab;
using support::set_of;

TEST_CASE("5-cycle") {
  const CoverFamily f = minimal_vertex_covers(cycle_graph(5));
  CHECK(f.size() == 5);
  CHECK(f.alpha0 == 3);
  CHECK(f.bight == 3);
  CHECK(f.unmixed);
  CHECK(f.index_of(set_of({1, 3, 4})) >= 0);
  CHECK(f.index_of(set_of({1, 2, 3})) == -1);
}

TEST_CASE("edgeless graph has the empty cover") {
  const CoverFamily f = minimal_vertex_covers(discrete_graph(3));
  REQUIRE(f.size() == 1);
  CHECK(f[0].empty());
  CHECK(f.alpha0 == 0);
}

TEST_CASE("complete graph") {
  const CoverFamily f = minimal_vertex_covers(complete_graph(5));
  CHECK(f.size() == 5);
  for (VertexSet c : f.covers) CHECK(c.size() == 4);
}

TEST_CASE("paths") {
  const CoverFamily p3 = minimal_vertex_covers(path_graph(3));
  CHECK(p3.alpha0 == 1);
  CHECK(p3.bight == 2);
  CHECK_FALSE(p3.unmixed);
  const CoverFamily p4 = minimal_vertex_covers(path_graph(4));
  CHECK(p4.size() == 3);
  CHECK(p4.unmixed);
}

TEST_CASE("ascending bitmask order") {
  const CoverFamily f = minimal_vertex_covers(support::figure1());
  CHECK(f.size() == 8);
  for (int i = 0; i + 1 < f.size(); ++i) CHECK(f[i].bits() < f[i + 1].bits());
}

TEST_CASE("subset-filter oracle agrees") {
  support::for_each_class(1, 7, [](const SimpleGraph& g) {
    const CoverFamily f = minimal_vertex_covers(g);
    const auto expected = oracle::minimal_covers(g);
    REQUIRE(f.covers.size() == expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) CHECK(f.covers[k].bits() == expected[k]);
  });
}

TEST_CASE("graphs with edges have two or more minimal covers") {
  support::for_each_class(2, 7, [](const SimpleGraph& g) {
    if (g.has_edges()) CHECK(minimal_vertex_covers(g).size() >= 2);
  });
}

TEST_CASE("cover predicates") {
  const SimpleGraph g = cycle_graph(5);
  CHECK(is_vertex_cover(g, set_of({1, 2, 3, 4})));
  CHECK_FALSE(is_minimal_cover(g, set_of({1, 2, 3, 4})));
  CHECK(is_minimal_cover(g, set_of({1, 3, 4})));
  CHECK_FALSE(is_vertex_cover(g, set_of({1, 3})));
  CHECK(covering_number(g) == 3);
  CHECK(independence_number(g) == 2);
  CHECK(covering_number(g, set_of({1, 2, 3})) == 1);
}

TEST_CASE("blocker neighbor set by brute force") {
  const SimpleGraph g = cycle_graph(5);
  const CoverFamily f = minimal_vertex_covers(g);
  for (std::uint64_t a = 0; a < 32; ++a) {
    const VertexSet set(a);
    bool holds_cover = false;
    for (VertexSet c : f.covers) holds_cover = holds_cover || c.is_subset_of(set);
    if (holds_cover) {
      CHECK_THROWS_AS(blocker_neighbor_set(f, set), PreconditionError);
      continue;
    }
    VertexSet expected;
    for (int t = 0; t < 5; ++t) {
      if (set.contains(t)) continue;
      for (VertexSet c : f.covers)
        if (c.is_subset_of(set.with(t))) expected.insert(t);
    }
    CHECK(blocker_neighbor_set(f, set) == expected);
  }
  CHECK(blocker_neighbor_set(f, set_of({3, 4})).contains(0));
}

TEST_CASE("cover cap") {
  CHECK_THROWS_AS(minimal_vertex_covers(matching_graph(6), 10), ResourceError);
  CHECK(minimal_vertex_covers(matching_graph(6)).size() == 64);
}
