#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coverlab/covers.hpp"
#include "coverlab/errors.hpp"
#include "coverlab/vnumber.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace coverlab;
using support::set_of;

TEST_CASE("5-cycle") {
  const SimpleGraph g = cycle_graph(5);
  CHECK(exchange_number(g) == 3);
  CHECK(v_cover_ideal(g) == 2);
  CHECK(v_edge_ideal(g) == 2);
  const auto w = has_exchange_property(g, set_of({1, 3, 4}));
  REQUIRE(w);
  CHECK(g.neighbors(w->out_vertex) - w->cover == VertexSet::singleton(w->in_vertex));
  CHECK(exchange_edges(g).size() == 5);
}

TEST_CASE("cycles") {
  for (int s = 3; s <= 12; ++s) CHECK(v_cover_ideal(cycle_graph(s)) == s / 2);
}

TEST_CASE("edgeless graphs are undefined") {
  CHECK_THROWS_AS(exchange_number(discrete_graph(3)), UndefinedError);
  CHECK_THROWS_AS(v_cover_ideal(discrete_graph(3)), UndefinedError);
  CHECK_THROWS_AS(v_edge_ideal(discrete_graph(3)), UndefinedError);
}

TEST_CASE("non-cover input") {
  CHECK_THROWS_AS(has_exchange_property(cycle_graph(5), set_of({1})), PreconditionError);
}

TEST_CASE("three exchange conditions agree on every cover") {
  support::for_each_class(2, 6, [](const SimpleGraph& g) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
      if (!g.is_vertex_cover(VertexSet(m))) continue;
      const ExchangeConditions c = exchange_conditions(g, VertexSet(m));
      CHECK(c.a.has_value() == c.b.has_value());
      CHECK(c.b.has_value() == c.c.has_value());
    }
  });
}

TEST_CASE("exchange number against a plain cover scan") {
  support::for_each_class(2, 7, [](const SimpleGraph& g) {
    if (!g.has_edges()) return;
    CHECK(exchange_number(g) == oracle::exchange_number(g));
  });
}

TEST_CASE("v-numbers against colon ideals") {
  support::for_each_class(2, 6, [](const SimpleGraph& g) {
    if (!g.has_edges()) return;
    CHECK(v_cover_ideal(g) == oracle::v_cover_ideal(g));
    CHECK(v_edge_ideal(g) == oracle::v_edge_ideal(g).value());
    for (const Edge& e : g.edges()) CHECK(v_p_cover_ideal(g, e) == oracle::v_at_edge(g, e.u, e.v));
  });
}

TEST_CASE("v is at least alpha0 - 1") {
  support::for_each_class(2, 7, [](const SimpleGraph& g) {
    if (g.has_edges()) CHECK(v_cover_ideal(g) >= minimal_vertex_covers(g).alpha0 - 1);
  });
}

TEST_CASE("figure 1") {
  const SimpleGraph g = support::figure1();
  CHECK(v_cover_ideal(g) == 5);
  const std::vector<Edge> expected = {Edge(0, 3), Edge(1, 2), Edge(4, 5), Edge(6, 7), Edge(8, 9)};
  CHECK(exchange_edges(g) == expected);
}

TEST_CASE("joins") {
  CHECK(v_cover_ideal(join(cycle_graph(5), cycle_graph(5))) == 7);
  CHECK(v_cover_ideal(join(cycle_graph(3), cycle_graph(5))) == 5);
}

TEST_CASE("analysis bundle") {
  const VNumberResult r = vnumber_analysis(cycle_graph(5));
  CHECK(r.alpha0 == 3);
  CHECK(r.alpha_e == 3);
  CHECK(r.v_cover == 2);
  CHECK(r.v_edge == 2);
  CHECK(r.per_prime.size() == 5);
}
