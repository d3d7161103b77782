#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coverlab/classify.hpp"
#include "coverlab/covers.hpp"
#include "coverlab/errors.hpp"
#include "coverlab/vnumber.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace coverlab;
using support::set_of;

TEST_CASE("(P) property") {
  const SimpleGraph g = support::whiskered_c4();
  CHECK(edge_has_P_property(g, Edge(0, 4)));
  CHECK_FALSE(edge_has_P_property(g, Edge(0, 1)));
  CHECK_THROWS_AS(edge_has_P_property(g, Edge(0, 2)), PreconditionError);
  // K2: both vertices have the same closed neighborhood.
  CHECK(edge_has_P_property(complete_graph(2), Edge(0, 1)));
}

TEST_CASE("(P) by definition equals meeting every cover once") {
  support::for_each_class(2, 6, [](const SimpleGraph& g) {
    const auto covers = oracle::minimal_covers(g);
    for (const Edge& e : g.edges()) {
      bool once = true;
      for (auto c : covers) once = once && (VertexSet(c) & e.as_set()).size() == 1;
      CHECK(edge_has_P_property(g, e) == once);
    }
  });
}

TEST_CASE("four-cycle report") {
  const SimpleGraph g = support::whiskered_c4();
  const FourCyclePReport r = four_cycle_P_report(g, {0, 1, 2, 3});
  CHECK(r.chordless);
  CHECK_FALSE(r.all_edges_p);
  CHECK_FALSE(r.disjoint_pair_p);
  const std::vector<int> sizes = {2, 2};
  const FourCyclePReport k22 = four_cycle_P_report(complete_multipartite(sizes), {0, 2, 1, 3});
  CHECK(k22.all_edges_p);
  CHECK(k22.meets_every_cover_twice);
}

TEST_CASE("Konig against matching and covering oracles") {
  support::for_each_class(1, 7, [](const SimpleGraph& g) {
    const auto covers = oracle::minimal_covers(g);
    int alpha0 = 64;
    for (auto c : covers) alpha0 = std::min(alpha0, VertexSet(c).size());
    CHECK(is_konig(g) == (oracle::maximum_matching(g) == alpha0));
  });
}

TEST_CASE("Cohen-Macaulay Konig graphs") {
  CHECK(cm_konig(support::whiskered_c4()));
  CHECK(cm_konig(complete_graph(2)));
  CHECK_FALSE(cm_konig(cycle_graph(4)));
  CHECK_THROWS_WITH_AS(cm_konig(cycle_graph(5)), doctest::Contains("Konig"), PreconditionError);
  CHECK_THROWS_WITH_AS(cm_konig(path_graph(3)), doctest::Contains("unmixed"), PreconditionError);
  CHECK_THROWS_WITH_AS(cm_konig(disjoint_union(complete_graph(2), discrete_graph(1))), doctest::Contains("isolated"),
                       PreconditionError);
}

TEST_CASE("Cohen-Macaulay means a unique perfect matching") {
  support::for_each_class(2, 8, [](const SimpleGraph& g) {
    if (!g.isolated_vertices().empty() || !minimal_vertex_covers(g).unmixed || !is_konig(g)) return;
    CHECK(cm_konig(g) == (oracle::perfect_matching_count(g) == 1));
  });
}

TEST_CASE("structure of a Cohen-Macaulay Konig graph") {
  const CmStructure s = cm_konig_structure(support::whiskered_c4());
  CHECK(s.perfect_matching.size() == 4);
  CHECK(s.perfect_matching == s.exchange_edges);
  CHECK(has_free_vertex(support::whiskered_c4()));
  CHECK_THROWS_AS(cm_konig_structure(cycle_graph(4)), PreconditionError);
}

TEST_CASE("Konig report") {
  const KonigReport r = konig_pm_analysis(support::whiskered_c4());
  CHECK(r.is_konig);
  CHECK(r.unmixed);
  CHECK(r.very_well_covered);
  CHECK(r.perfect_matching_count == 1);
  CHECK(r.cm == true);
  CHECK(r.linearly_presented == true);
  const KonigReport c5 = konig_pm_analysis(cycle_graph(5));
  CHECK_FALSE(c5.is_konig);
  CHECK_FALSE(c5.cm.has_value());
}

TEST_CASE("symmetric difference of the outer covers of the induced figure-2 subgraph") {
  const SimpleGraph h = induced_subgraph(support::figure2(), set_of({1, 2, 3, 6, 7})).graph;
  const CoverFamily f = minimal_vertex_covers(h);
  CHECK(f.size() == 4);
  const SymDiffReport r = sym_diff_analysis(h, f, f.index_of(set_of({1, 3, 5})), f.index_of(set_of({2, 3, 4})));
  CHECK(r.bipartition_ok);
  CHECK(r.sizes_ok);
  CHECK(r.sub.graph.order() == 4);
  CHECK(r.sub.graph.edge_count() == 4);
  CHECK(r.unmixed);
  CHECK(r.cm == false);
  CHECK(r.witness_cover.has_value());
}

TEST_CASE("family membership and strictness") {
  auto flags = [](const SimpleGraph& g) {
    const FamilyMembership m = family_membership(g);
    return std::vector<bool>{m.u, m.u1, m.u2, m.u3, m.u4, m.u5};
  };
  using V = std::vector<bool>;
  CHECK(flags(support::whiskered_c4()) == V{true, true, true, true, true, false});
  CHECK(flags(support::figure2()) == V{true, true, true, true, false, false});
  CHECK(flags(support::figure1()) == V{true, true, true, false, false, false});
  const std::vector<int> k222 = {2, 2, 2}, k22 = {2, 2};
  CHECK(flags(complete_multipartite(k222)) == V{true, true, false, false, false, false});
  CHECK(flags(complete_multipartite(k22)) == V{true, false, false, false, false, false});
  CHECK(flags(cycle_graph(5)) == V{true, true, true, true, true, true});
  CHECK(flags(path_graph(3)) == V{false, false, false, false, false, false});
}

TEST_CASE("very well covered and free vertices") {
  CHECK(is_very_well_covered(matching_graph(3)));
  CHECK_FALSE(is_very_well_covered(cycle_graph(5)));
  CHECK_FALSE(has_free_vertex(cycle_graph(4)));
}
