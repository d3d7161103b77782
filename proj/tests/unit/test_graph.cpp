#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "coverlab/classify.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace coverlab;
using support::graph_of;

TEST_CASE("constructors reject loops and bad labels") {
  const std::vector<Edge> loop = {Edge(1, 1)};
  CHECK_THROWS_AS(SimpleGraph::from_edges(3, loop), InvalidGraph);
  const std::vector<Edge> far = {Edge(0, 5)};
  CHECK_THROWS_AS(SimpleGraph::from_edges(3, far), InvalidGraph);
  CHECK_THROWS_AS(SimpleGraph(65), InvalidGraph);
}

TEST_CASE("builders") {
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(path_graph(4).edge_count() == 3);
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(discrete_graph(4).edge_count() == 0);
  const SimpleGraph h3 = matching_graph(3);
  CHECK(h3.order() == 6);
  CHECK(h3.adjacent(0, 3));
  CHECK(h3.edge_count() == 3);
  const std::vector<int> sizes = {2, 3};
  CHECK(complete_multipartite(sizes).edge_count() == 6);
  const SimpleGraph j = join(cycle_graph(3), cycle_graph(5));
  CHECK(j.order() == 8);
  CHECK(j.edge_count() == 3 + 5 + 15);
  CHECK(disjoint_union(cycle_graph(3), path_graph(2)).edge_count() == 4);
}

TEST_CASE("induced subgraph keeps labels in order") {
  const InducedSubgraph s = induced_subgraph(cycle_graph(5), support::set_of({1, 2, 4}));
  CHECK(s.graph.order() == 3);
  CHECK(s.graph.edge_count() == 1);
  CHECK(s.to_parent == std::vector<int>{0, 1, 3});
  CHECK(s.lift(VertexSet{0, 2}) == support::set_of({1, 4}));
}

TEST_CASE("complement is an involution") {
  support::for_each_class(0, 7, [](const SimpleGraph& g) { CHECK(complement(complement(g)) == g); });
}

TEST_CASE("components and bipartition") {
  const SimpleGraph g = disjoint_union(cycle_graph(4), cycle_graph(3));
  CHECK(connected_components(g).size() == 2);
  CHECK_FALSE(is_connected(g));
  CHECK_FALSE(is_bipartite(g));
  const auto sides = bipartition(cycle_graph(6));
  REQUIRE(sides);
  CHECK((*sides)[0] == 0);
  CHECK((*sides)[1] == 1);
}

TEST_CASE("cycle queries") {
  const auto k4 = four_cycles(complete_graph(4));
  CHECK(k4.size() == 3);
  for (const FourCycle& c : k4) CHECK_FALSE(c.chordless);
  const auto c4 = four_cycles(cycle_graph(4));
  REQUIRE(c4.size() == 1);
  CHECK(c4[0].chordless);
  CHECK(c4[0].v == std::array<int, 4>{0, 1, 2, 3});
  CHECK(has_3_cycle(cycle_graph(3)));
  CHECK_FALSE(has_3_cycle(cycle_graph(5)));
  CHECK(has_5_cycle(cycle_graph(5)));
  CHECK_FALSE(has_5_cycle(cycle_graph(6)));
  const CycleReport r = cycle_queries(support::whiskered_c4());
  CHECK(r.has_induced_4_cycle);
  CHECK_FALSE(r.has_3_cycle);
}

TEST_CASE("maximum matching agrees with the subset oracle") {
  support::for_each_class(1, 7, [](const SimpleGraph& g) { CHECK(maximum_matching_size(g) == oracle::maximum_matching(g)); });
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Edge> edges;
    for (int u = 0; u < 10; ++u)
      for (int v = u + 1; v < 10; ++v)
        if (rng() % 3 == 0) edges.emplace_back(u, v);
    const SimpleGraph g = SimpleGraph::from_edges(10, edges);
    CHECK(maximum_matching_size(g) == oracle::maximum_matching(g));
  }
}

TEST_CASE("perfect matchings are disjoint and spanning") {
  support::for_each_class(2, 7, [](const SimpleGraph& g) {
    const auto all = all_perfect_matchings(g);
    CHECK(static_cast<int>(all.size()) == oracle::perfect_matching_count(g));
    for (const Matching& m : all) {
      VertexSet covered;
      for (const Edge& e : m) {
        CHECK(g.adjacent(e.u, e.v));
        CHECK_FALSE(covered.contains(e.u));
        CHECK_FALSE(covered.contains(e.v));
        covered.insert(e.u);
        covered.insert(e.v);
      }
      CHECK(covered == g.vertices());
    }
  });
}

TEST_CASE("duplicated vertices use open neighborhoods") {
  const std::vector<int> sizes = {2, 2};
  const auto dup = duplicated_vertex_pairs(complete_multipartite(sizes));
  CHECK(dup.size() == 2);
  CHECK(duplicated_vertex_pairs(complete_graph(3)).empty());
  CHECK(duplicated_vertex_pairs(support::figure1()).empty());
}

TEST_CASE("multipartite shape and codi graphs") {
  const std::vector<int> sizes = {2, 2};
  const auto k22 = multipartite_shape(complete_multipartite(sizes));
  REQUIRE(k22);
  CHECK(k22->sizes == std::vector<int>{2, 2});
  CHECK(k22->homogeneous);
  CHECK_FALSE(multipartite_shape(cycle_graph(5)));
  CHECK_FALSE(is_codi_graph(cycle_graph(5)));
  const SimpleGraph j = join(cycle_graph(5), cycle_graph(5));
  CHECK(is_codi_graph(j));
  CHECK_FALSE(multipartite_shape(j));
}

TEST_CASE("complete multipartite iff every induced subgraph with an edge is connected") {
  support::for_each_class(1, 7, [](const SimpleGraph& g) {
    if (!g.has_edges()) return;
    CHECK(multipartite_shape(g).has_value() == induced_subgraphs_with_edges_connected(g));
  });
}

TEST_CASE("labels print 1-indexed") {
  CHECK(Edge(2, 0).to_string() == "t1-t3");
  CHECK(graph_of(3, {{1, 2}, {2, 3}}).to_string() == "t1-t2,t2-t3");
}
