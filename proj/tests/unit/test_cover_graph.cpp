#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coverlab/cover_graph.hpp"
#include "coverlab/errors.hpp"
#include "coverlab/vnumber.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace coverlab;
using support::set_of;

namespace {

int index_of(const CoverGraph& cg, std::initializer_list<int> labels) {
  const int i = cg.family.index_of(set_of(labels));
  REQUIRE(i >= 0);
  return i;
}

}  // namespace

TEST_CASE("5-cycle gives a 5-cycle") {
  const CoverGraph cg = build_cover_graph(cycle_graph(5));
  CHECK(cg.order() == 5);
  CHECK(cg.edges.size() == 5);
  CHECK(cg.is_regular(2));
  CHECK(cg.connected());
  CHECK(strong_triangles(cg).empty());
  CHECK(is_linearly_presented(cg).linearly_presented);
}

TEST_CASE("mixed graphs are refused") {
  CHECK_THROWS_AS(build_cover_graph(path_graph(3)), PreconditionError);
}

TEST_CASE("edge witnesses") {
  const SimpleGraph g = support::figure2();
  const CoverGraph cg = build_cover_graph(g);
  for (const CoverGraphEdge& e : cg.edges) {
    CHECK(e.i < e.j);
    CHECK(g.adjacent(e.out_vertex, e.in_vertex));
    CHECK(cg.family[e.j] == cg.family[e.i].without(e.out_vertex).with(e.in_vertex));
    CHECK(cg.adjacent(e.j, e.i));
  }
}

TEST_CASE("figure 1: two paths") {
  const CoverGraph cg = build_cover_graph(support::figure1());
  CHECK(cg.component_count() == 2);
  CHECK(cg.edges.size() == 6);
  CHECK_FALSE(cg.connected());
  CHECK_FALSE(is_linearly_presented(cg).linearly_presented);
}

TEST_CASE("figure 2: path, not linearly presented") {
  const CoverGraph cg = build_cover_graph(support::figure2());
  CHECK(cg.order() == 6);
  CHECK(cg.edges.size() == 5);
  CHECK(cg.connected());
  const int first = index_of(cg, {2, 3, 5, 6}), last = index_of(cg, {1, 3, 5, 7});
  const RestrictedSubgraph r = restricted_subgraph(cg, first, last);
  CHECK(r.members.size() == 2);
  CHECK(r.edges.empty());
  CHECK_FALSE(r.connects_pair);
  const LinearPresentation lp = is_linearly_presented(cg);
  CHECK_FALSE(lp.linearly_presented);
  REQUIRE(lp.certificate);
  CHECK(*lp.certificate == std::pair{std::min(first, last), std::max(first, last)});

  std::vector<int> inner;
  for (auto labels : {std::initializer_list<int>{2, 3, 4, 6}, {1, 2, 4, 6}, {1, 2, 4, 7}, {1, 3, 4, 7}})
    inner.push_back(index_of(cg, labels));
  const PathDiagnostics d = path_diagnostics(cg, inner);
  CHECK(d.inside_restriction);
  CHECK_FALSE(d.witnesses_form_matching);

  const TreeCheck t = tree_linear_presentation_check(support::figure2());
  CHECK(t.is_path);
  CHECK_FALSE(t.path_criterion);
  CHECK_FALSE(t.tree_criterion);
  CHECK_FALSE(t.restricted_criterion);
}

TEST_CASE("path diagnostics rejects non-paths") {
  const CoverGraph cg = build_cover_graph(support::figure2());
  CHECK_THROWS_AS(path_diagnostics(cg, {0, 0}), PreconditionError);
}

TEST_CASE("triangle has strong triangles") {
  const CoverGraph cg = build_cover_graph(complete_graph(3));
  CHECK(cg.edges.size() == 3);
  CHECK(strong_triangles(cg).size() == 1);
}

TEST_CASE("disjoint edges give a hypercube") {
  for (int r = 2; r <= 6; ++r) {
    const CoverGraph cg = build_cover_graph(matching_graph(r));
    CHECK(cg.order() == (1 << r));
    CHECK(static_cast<int>(cg.edges.size()) == r << (r - 1));
    CHECK(cg.is_regular(r));
    CHECK(cg.bipartition().has_value());
  }
}

TEST_CASE("restricted connectivity and components against raw covers") {
  support::for_each_class(2, 7, [](const SimpleGraph& g) {
    if (!g.has_edges()) return;
    const CoverFamily f = minimal_vertex_covers(g);
    if (!f.unmixed) return;
    const CoverGraph cg = build_cover_graph(g, f);
    CHECK(cg.component_count() == oracle::cover_graph_components(g));
    CHECK(is_linearly_presented(cg).linearly_presented == oracle::linearly_presented(g));
  });
}

TEST_CASE("linear presentation forces connectivity and v = alpha0 - 1") {
  support::for_each_class(2, 7, [](const SimpleGraph& g) {
    if (!g.has_edges()) return;
    const CoverFamily f = minimal_vertex_covers(g);
    if (!f.unmixed) return;
    const CoverGraph cg = build_cover_graph(g, f);
    if (!is_linearly_presented(cg).linearly_presented) return;
    CHECK(cg.connected());
    CHECK(v_cover_ideal(g) == f.alpha0 - 1);
  });
}
