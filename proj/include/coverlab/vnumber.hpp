#pragma once

#include <map>
#include <optional>
#include <vector>

#include "coverlab/covers.hpp"
#include "coverlab/graph.hpp"

namespace coverlab {

// C is a cover, out_vertex in C, in_vertex not in C, {out,in} an edge and
// (C - out) + in is again a cover.
struct ExchangeWitness {
  VertexSet cover;
  int out_vertex = -1;
  int in_vertex = -1;

  Edge edge() const { return Edge(out_vertex, in_vertex); }
  VertexSet swapped() const { return cover.without(out_vertex).with(in_vertex); }
};

// The three equivalent formulations of the exchange property, each searched
// independently (first witness in (out, in) lexicographic order).
struct ExchangeConditions {
  std::optional<ExchangeWitness> a;  // N(out) - C = {in}
  std::optional<ExchangeWitness> b;  // (C - out) + in is a cover
  std::optional<ExchangeWitness> c;  // some cover C1 with C ^ C1 an edge
};

ExchangeConditions exchange_conditions(const SimpleGraph& g, VertexSet c);
// Throws PreconditionError if c is not a cover, InvariantViolation if the
// three conditions disagree.
std::optional<ExchangeWitness> has_exchange_property(const SimpleGraph& g, VertexSet c);

// Smallest size of a cover with the exchange property.
int exchange_number(const SimpleGraph& g);
// v(I_c(G)) = alpha_e - 1.
int v_cover_ideal(const SimpleGraph& g);
// v at the associated prime (t_k, t_l) of the edge e.
int v_p_cover_ideal(const SimpleGraph& g, Edge e);
// v(I(G)): least |A| over stable A whose neighbor set is a minimal cover.
int v_edge_ideal(const SimpleGraph& g);

// A pair of minimal covers with C_to = (C_from - out) + in.
struct ExchangeMove {
  int from = -1;
  int to = -1;
  int out_vertex = -1;
  int in_vertex = -1;

  Edge edge() const { return Edge(out_vertex, in_vertex); }
};

// Every ordered pair (from, to) of minimal covers related by a single swap.
std::vector<ExchangeMove> exchange_moves(const SimpleGraph& g, const CoverFamily& family);
std::vector<Edge> exchange_edges(const SimpleGraph& g, const CoverFamily& family);
std::vector<Edge> exchange_edges(const SimpleGraph& g);

struct VNumberResult {
  int alpha0 = 0;
  int alpha_e = 0;
  int v_cover = 0;
  std::optional<int> v_edge;
  std::map<Edge, int> per_prime;
  std::vector<Edge> exchange_edges;
};

VNumberResult vnumber_analysis(const SimpleGraph& g);

}  // namespace coverlab
