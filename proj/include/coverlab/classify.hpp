#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "coverlab/cover_graph.hpp"
#include "coverlab/covers.hpp"
#include "coverlab/graph.hpp"

namespace coverlab {

// (P) property of e = {t1, t2}: for t1' in N(t1) - t2 and t2' in N(t2) - t1,
// {t1', t2'} is an edge (t1' = t2' never is).
bool p_property_by_definition(const SimpleGraph& g, Edge e);
// |e & C| = 1 for every minimal cover C.
bool p_property_by_covers(const CoverFamily& family, Edge e);
// Both forms, asserted equal. Throws PreconditionError if e is not an edge.
bool edge_has_P_property(const SimpleGraph& g, Edge e);
bool edge_has_P_property(const SimpleGraph& g, const CoverFamily& family, Edge e);
std::map<Edge, bool> p_property_flags(const SimpleGraph& g, const CoverFamily& family);

struct FourCyclePReport {
  std::array<int, 4> cycle{};
  bool all_edges_p = false;        // (a)
  bool disjoint_pair_p = false;    // (b) two opposite edges have (P)
  bool meets_every_cover_twice = false;  // (c)
  bool chordless = false;
  // Filled when all_edges_p: N(t1) = N(t3) and N(t2) = N(t4).
  std::optional<bool> opposite_neighborhoods_equal;
};

// `cycle` lists the vertices in cyclic order. Asserts (a) = (b) = (c) and, under
// (a), the opposite-neighborhood equalities and chordlessness.
FourCyclePReport four_cycle_P_report(const SimpleGraph& g, std::array<int, 4> cycle);
FourCyclePReport four_cycle_P_report(const SimpleGraph& g, const CoverFamily& family, std::array<int, 4> cycle);

bool is_konig(const SimpleGraph& g);
bool is_very_well_covered(const SimpleGraph& g);
// Some vertex of degree one.
bool has_free_vertex(const SimpleGraph& g);

// Perfect matching whose edges have (P) and no 4-cycle holds two of its edges.
// Requires a Konig, unmixed graph without isolated vertices; the exception
// message names the hypothesis that failed. Asserts agreement with the
// unique-perfect-matching criterion.
bool cm_konig(const SimpleGraph& g);

struct KonigReport {
  int matching_number = 0;
  int alpha0 = 0;
  bool is_konig = false;
  bool unmixed = false;
  bool no_isolated = false;
  int perfect_matching_count = 0;
  std::optional<Matching> unique_pm;
  bool very_well_covered = false;
  // The six predicates. cm is absent outside unmixed Konig graphs without
  // isolated vertices; the two cover-graph predicates need an unmixed graph
  // with edges.
  std::optional<bool> cm;
  std::optional<bool> linearly_presented;
  std::optional<bool> gj_connected;
  bool no_duplicates = false;
  bool induced_4cycles_ok = false;  // every induced 4-cycle has an edge without (P)
  bool unique_pm_flag = false;
};

KonigReport konig_pm_analysis(const SimpleGraph& g);

struct CmStructure {
  Matching perfect_matching;
  std::vector<Edge> exchange_edges;
  std::vector<int> cover_graph_sides;
};

// Requires cm_konig(g). Asserts that the perfect matching equals the exchange
// edges and that the cover graph is bipartite.
CmStructure cm_konig_structure(const SimpleGraph& g);

struct SymDiffReport {
  int i = -1;
  int j = -1;
  VertexSet b1;  // C_i - C_j
  VertexSet b2;  // C_j - C_i
  InducedSubgraph sub;
  bool bipartition_ok = false;  // B1, B2 stable in G
  int sub_alpha0 = 0;
  bool sizes_ok = false;        // |B1| = |B2| = alpha0(G')
  std::optional<Matching> perfect_matching;
  bool unmixed = false;
  bool no_isolated = false;
  std::optional<bool> cm;       // when G' is unmixed with a perfect matching
  // A minimal cover C of G with C_i & C_j not inside C and C inside C_i | C_j.
  std::optional<VertexSet> witness_cover;
};

// Requires an unmixed graph and i != j.
SymDiffReport sym_diff_analysis(const SimpleGraph& g, const CoverFamily& family, int i, int j);
SymDiffReport sym_diff_analysis(const SimpleGraph& g, int i, int j);

struct FamilyMembership {
  bool u = false;   // unmixed
  bool u1 = false;  // every induced 4-cycle has an edge without (P)
  bool u2 = false;  // no duplicated vertices
  bool u3 = false;  // cover graph connected
  bool u4 = false;  // cover ideal linearly presented
  bool u5 = false;  // no induced 4-cycle
};

// u4 from restricted connectivity, checked against the syzygy criterion when
// that fits its budget. Edgeless graphs have a principal cover ideal, so
// u3 and u4 hold there.
FamilyMembership family_membership(const SimpleGraph& g);

// Every induced subgraph with at least one edge is connected.
bool induced_subgraphs_with_edges_connected(const SimpleGraph& g);

}  // namespace coverlab
