#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coverlab/vertex_set.hpp"

namespace coverlab {

// Undirected edge, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  VertexSet as_set() const { return VertexSet{u, v}; }
  bool contains(int w) const { return w == u || w == v; }
  int other(int w) const { return w == u ? v : u; }
  std::string to_string() const;  // "t1-t2"
  auto operator<=>(const Edge&) const = default;
};

using Matching = std::vector<Edge>;

// Thrown by the constructors for loops, out-of-range endpoints or n > 64.
class InvalidGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);  // edgeless

  static SimpleGraph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
  static SimpleGraph from_edges(int n, std::span<const Edge> edges);
  // Validates symmetry and loop-freeness.
  static SimpleGraph from_adjacency(std::vector<VertexSet> adj);

  int order() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return VertexSet::first(order()); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  VertexSet closed_neighbors(int v) const { return adj_[v].with(v); }
  // Union of N(v) over v in A.
  VertexSet neighbors(VertexSet a) const;
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  int degree(int v) const { return adj_[v].size(); }
  int edge_count() const;
  bool has_edges() const;
  std::vector<Edge> edges() const;  // lexicographic
  const std::vector<VertexSet>& adjacency() const { return adj_; }

  bool is_stable(VertexSet s) const;
  bool is_vertex_cover(VertexSet c) const;
  VertexSet isolated_vertices() const;

  std::string to_string() const;  // "t1-t2,t2-t3"

  bool operator==(const SimpleGraph&) const = default;

 private:
  std::vector<VertexSet> adj_;
};

struct InducedSubgraph {
  SimpleGraph graph;
  std::vector<int> to_parent;  // vertex i of graph is to_parent[i] in the host

  VertexSet lift(VertexSet local) const;
};

InducedSubgraph induced_subgraph(const SimpleGraph& g, VertexSet keep);
SimpleGraph complement(const SimpleGraph& g);
// Vertices of g2 are shifted by g1.order().
SimpleGraph disjoint_union(const SimpleGraph& g1, const SimpleGraph& g2);
SimpleGraph join(const SimpleGraph& g1, const SimpleGraph& g2);

// Components ordered by their lowest vertex.
std::vector<VertexSet> connected_components(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);

// side[v] in {0,1}; the lowest vertex of every component gets side 0.
std::optional<std::vector<int>> bipartition(const SimpleGraph& g);
inline bool is_bipartite(const SimpleGraph& g) { return bipartition(g).has_value(); }

// a-b-c-d-a with a the smallest vertex and b < d.
struct FourCycle {
  std::array<int, 4> v{};
  bool chordless = false;

  std::array<Edge, 4> edges() const {
    return {Edge(v[0], v[1]), Edge(v[1], v[2]), Edge(v[2], v[3]), Edge(v[3], v[0])};
  }
  VertexSet vertex_set() const { return VertexSet{v[0], v[1], v[2], v[3]}; }
};

struct CycleReport {
  bool has_3_cycle = false;
  bool has_5_cycle = false;
  bool has_induced_4_cycle = false;
  std::vector<FourCycle> four_cycles;
};

CycleReport cycle_queries(const SimpleGraph& g);
std::vector<FourCycle> four_cycles(const SimpleGraph& g);
bool has_3_cycle(const SimpleGraph& g);
bool has_5_cycle(const SimpleGraph& g);

int maximum_matching_size(const SimpleGraph& g);
// Every perfect matching, each sorted by edge, in lexicographic order.
std::vector<Matching> all_perfect_matchings(const SimpleGraph& g);
bool is_matching(const SimpleGraph& g, const Matching& m);

// Pairs (t, t') with t < t' and N(t) = N(t').
std::vector<Edge> duplicated_vertex_pairs(const SimpleGraph& g);

struct MultipartiteShape {
  std::vector<VertexSet> parts;  // ordered by lowest vertex
  std::vector<int> sizes;        // ascending
  bool homogeneous = false;
};

// Present iff the complement is a disjoint union of cliques. An edgeless graph
// is reported as a single part.
std::optional<MultipartiteShape> multipartite_shape(const SimpleGraph& g);
bool is_codi_graph(const SimpleGraph& g);

// Builders.
SimpleGraph cycle_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph complete_graph(int n);
SimpleGraph discrete_graph(int n);
SimpleGraph complete_multipartite(std::span<const int> part_sizes);
// H_r: vertices t1..t2r, edges {t_i, t_{r+i}}.
SimpleGraph matching_graph(int r);

}  // namespace coverlab
