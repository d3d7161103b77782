#include "coverlab/vnumber.hpp"

#include <algorithm>
#include <limits>

#include "coverlab/errors.hpp"

namespace coverlab {

namespace {

void require_edges(const SimpleGraph& g, const char* what) {
  if (!g.has_edges()) throw UndefinedError(std::string(what) + " is undefined for a graph without edges");
}

ExchangeWitness make_witness(VertexSet c, int out, int in) {
  ExchangeWitness w;
  w.cover = c;
  w.out_vertex = out;
  w.in_vertex = in;
  return w;
}

// Forced part and remainder of the reduced formula for the edge {k, l}.
int reduced_term(const SimpleGraph& g, Edge e) {
  const VertexSet ends = e.as_set();
  const VertexSet forced = (g.neighbors(e.u) | g.neighbors(e.v)) - ends;
  const VertexSet rest = g.vertices() - g.closed_neighbors(e.u) - g.closed_neighbors(e.v);
  return forced.size() + covering_number(g, rest);
}

}  // namespace

ExchangeConditions exchange_conditions(const SimpleGraph& g, VertexSet c) {
  ExchangeConditions r;
  for (int k : c) {
    for (int l : g.neighbors(k) - c) {
      if (!r.a && (g.neighbors(k) - c) == VertexSet::singleton(l)) r.a = make_witness(c, k, l);
      if (!r.b && g.is_vertex_cover(c.without(k).with(l))) r.b = make_witness(c, k, l);
    }
  }
  // (c): any edge {x, y} with C ^ {x, y} again a cover.
  for (const Edge& e : g.edges()) {
    if (!g.is_vertex_cover(c ^ e.as_set())) continue;
    check_invariant(c.contains(e.u) != c.contains(e.v),
                    "symmetric difference edge " + e.to_string() + " not split by " + c.to_string());
    r.c = c.contains(e.u) ? make_witness(c, e.u, e.v) : make_witness(c, e.v, e.u);
    break;
  }
  return r;
}

std::optional<ExchangeWitness> has_exchange_property(const SimpleGraph& g, VertexSet c) {
  if (!g.is_vertex_cover(c)) throw PreconditionError(c.to_string() + " is not a vertex cover");
  ExchangeConditions r = exchange_conditions(g, c);
  check_invariant(r.a.has_value() == r.b.has_value() && r.b.has_value() == r.c.has_value(),
                  "exchange conditions disagree on " + c.to_string() + " in " + g.to_string());
  return r.a;
}

int exchange_number(const SimpleGraph& g) {
  require_edges(g, "the exchange number");
  int best = std::numeric_limits<int>::max();
  for (const Edge& e : g.edges()) best = std::min(best, reduced_term(g, e));
  return best + 1;
}

int v_cover_ideal(const SimpleGraph& g) { return exchange_number(g) - 1; }

int v_p_cover_ideal(const SimpleGraph& g, Edge e) {
  if (e.v >= g.order() || !g.adjacent(e.u, e.v))
    throw PreconditionError(e.to_string() + " is not an edge of the graph");
  return reduced_term(g, e);
}

int v_edge_ideal(const SimpleGraph& g) {
  require_edges(g, "the v-number of the edge ideal");
  const int n = g.order();
  for (int k = 1; k <= n; ++k) {
    // Gosper's hack over k-subsets of {0..n-1}.
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (s < limit) {
      const VertexSet a(s);
      if (g.is_stable(a) && is_minimal_cover(g, g.neighbors(a))) return k;
      const std::uint64_t low = s & (~s + 1);
      const std::uint64_t ripple = s + low;
      s = (((ripple ^ s) >> 2) / low) | ripple;
    }
  }
  throw InvariantViolation("no stable set with minimal-cover neighbor set in " + g.to_string());
}

std::vector<ExchangeMove> exchange_moves(const SimpleGraph& g, const CoverFamily& family) {
  std::vector<ExchangeMove> out;
  for (int i = 0; i < family.size(); ++i) {
    for (int j = 0; j < family.size(); ++j) {
      if (i == j) continue;
      const VertexSet gone = family[i] - family[j];
      const VertexSet added = family[j] - family[i];
      if (gone.size() != 1 || added.size() != 1) continue;
      const int out_vertex = gone.lowest();
      const int in_vertex = added.lowest();
      check_invariant(g.adjacent(out_vertex, in_vertex),
                      "covers " + family[i].to_string() + " and " + family[j].to_string() +
                          " differ by a non-edge");
      out.push_back({i, j, out_vertex, in_vertex});
    }
  }
  return out;
}

std::vector<Edge> exchange_edges(const SimpleGraph& g, const CoverFamily& family) {
  std::vector<Edge> out;
  for (const ExchangeMove& m : exchange_moves(g, family)) out.push_back(m.edge());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Edge> exchange_edges(const SimpleGraph& g) { return exchange_edges(g, minimal_vertex_covers(g)); }

VNumberResult vnumber_analysis(const SimpleGraph& g) {
  require_edges(g, "the v-number");
  const CoverFamily family = minimal_vertex_covers(g);
  VNumberResult r;
  r.alpha0 = family.alpha0;
  r.alpha_e = exchange_number(g);
  r.v_cover = r.alpha_e - 1;
  r.v_edge = v_edge_ideal(g);
  for (const Edge& e : g.edges()) r.per_prime[e] = v_p_cover_ideal(g, e);
  r.exchange_edges = exchange_edges(g, family);
  check_invariant(r.v_cover >= r.alpha0 - 1, "v(I_c) below alpha_0 - 1 for " + g.to_string());
  return r;
}

}  // namespace coverlab
