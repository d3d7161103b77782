#include "coverlab/classify.hpp"

#include <algorithm>

#include "coverlab/errors.hpp"
#include "coverlab/syzygy.hpp"
#include "coverlab/vnumber.hpp"

namespace coverlab {

namespace {

void require_edge(const SimpleGraph& g, Edge e) {
  if (e.v >= g.order() || !g.adjacent(e.u, e.v))
    throw PreconditionError(e.to_string() + " is not an edge of the graph");
}

std::string cycle_label(const std::array<int, 4>& c) {
  std::string s;
  for (int v : c) s += (s.empty() ? "t" : "-t") + std::to_string(v + 1);
  return s;
}

// Some 4-cycle (chorded or not) uses two edges of the matching.
bool four_cycle_with_two(const SimpleGraph& g, const Matching& pm) {
  for (const FourCycle& c : four_cycles(g)) {
    int hits = 0;
    for (const Edge& e : c.edges())
      if (std::find(pm.begin(), pm.end(), e) != pm.end()) ++hits;
    if (hits >= 2) return true;
  }
  return false;
}

}  // namespace

bool p_property_by_definition(const SimpleGraph& g, Edge e) {
  for (int a : g.neighbors(e.u).without(e.v))
    for (int b : g.neighbors(e.v).without(e.u))
      if (a == b || !g.adjacent(a, b)) return false;
  return true;
}

bool p_property_by_covers(const CoverFamily& family, Edge e) {
  return std::all_of(family.covers.begin(), family.covers.end(),
                     [&](VertexSet c) { return (c & e.as_set()).size() == 1; });
}

bool edge_has_P_property(const SimpleGraph& g, Edge e) {
  require_edge(g, e);
  return edge_has_P_property(g, minimal_vertex_covers(g), e);
}

bool edge_has_P_property(const SimpleGraph& g, const CoverFamily& family, Edge e) {
  require_edge(g, e);
  const bool def = p_property_by_definition(g, e);
  check_invariant(def == p_property_by_covers(family, e),
                  "(P) by definition and by covers disagree on " + e.to_string());
  return def;
}

std::map<Edge, bool> p_property_flags(const SimpleGraph& g, const CoverFamily& family) {
  std::map<Edge, bool> out;
  for (const Edge& e : g.edges()) out[e] = edge_has_P_property(g, family, e);
  return out;
}

FourCyclePReport four_cycle_P_report(const SimpleGraph& g, std::array<int, 4> cycle) {
  return four_cycle_P_report(g, minimal_vertex_covers(g), cycle);
}

FourCyclePReport four_cycle_P_report(const SimpleGraph& g, const CoverFamily& family, std::array<int, 4> cycle) {
  const VertexSet vs{cycle[0], cycle[1], cycle[2], cycle[3]};
  bool ok = vs.size() == 4 && std::all_of(cycle.begin(), cycle.end(), [&](int v) { return v >= 0 && v < g.order(); });
  for (int k = 0; ok && k < 4; ++k) ok = g.adjacent(cycle[k], cycle[(k + 1) % 4]);
  if (!ok) throw PreconditionError(cycle_label(cycle) + " is not a 4-cycle of the graph");

  FourCyclePReport r;
  r.cycle = cycle;
  bool p[4];
  for (int k = 0; k < 4; ++k) p[k] = edge_has_P_property(g, family, Edge(cycle[k], cycle[(k + 1) % 4]));
  r.all_edges_p = p[0] && p[1] && p[2] && p[3];
  r.disjoint_pair_p = (p[0] && p[2]) || (p[1] && p[3]);
  r.meets_every_cover_twice = std::all_of(family.covers.begin(), family.covers.end(),
                                          [&](VertexSet c) { return (c & vs).size() == 2; });
  r.chordless = !g.adjacent(cycle[0], cycle[2]) && !g.adjacent(cycle[1], cycle[3]);
  check_invariant(r.all_edges_p == r.disjoint_pair_p && r.disjoint_pair_p == r.meets_every_cover_twice,
                  "4-cycle conditions disagree on " + cycle_label(cycle));
  if (r.all_edges_p) {
    r.opposite_neighborhoods_equal = g.neighbors(cycle[0]) == g.neighbors(cycle[2]) &&
                                     g.neighbors(cycle[1]) == g.neighbors(cycle[3]);
    check_invariant(*r.opposite_neighborhoods_equal && r.chordless,
                    "4-cycle with (P) edges lacks equal opposite neighborhoods or has a chord: " +
                        cycle_label(cycle));
  }
  return r;
}

bool is_konig(const SimpleGraph& g) { return maximum_matching_size(g) == covering_number(g); }

bool is_very_well_covered(const SimpleGraph& g) {
  if (g.order() == 0 || !g.isolated_vertices().empty()) return false;
  const CoverFamily f = minimal_vertex_covers(g);
  return f.unmixed && 2 * f.alpha0 == g.order();
}

bool has_free_vertex(const SimpleGraph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) return true;
  return false;
}

bool cm_konig(const SimpleGraph& g) {
  if (!g.isolated_vertices().empty())
    throw PreconditionError("Cohen-Macaulay test needs no isolated vertices; " +
                            g.isolated_vertices().to_string() + " are isolated");
  const CoverFamily family = minimal_vertex_covers(g);
  if (!family.unmixed) throw PreconditionError("Cohen-Macaulay test needs an unmixed graph");
  if (maximum_matching_size(g) != family.alpha0)
    throw PreconditionError("Cohen-Macaulay test is undecidable here: the graph is not Konig");

  const std::vector<Matching> pms = all_perfect_matchings(g);
  bool cm = false;
  for (const Matching& pm : pms) {
    const bool all_p = std::all_of(pm.begin(), pm.end(),
                                   [&](const Edge& e) { return edge_has_P_property(g, family, e); });
    if (all_p && !four_cycle_with_two(g, pm)) {
      cm = true;
      break;
    }
  }
  check_invariant(cm == (pms.size() == 1),
                  "matching criterion and unique perfect matching disagree on " + g.to_string());
  return cm;
}

KonigReport konig_pm_analysis(const SimpleGraph& g) {
  KonigReport r;
  const CoverFamily family = minimal_vertex_covers(g);
  r.matching_number = maximum_matching_size(g);
  r.alpha0 = family.alpha0;
  r.is_konig = r.matching_number == r.alpha0;
  r.unmixed = family.unmixed;
  r.no_isolated = g.isolated_vertices().empty();
  const std::vector<Matching> pms = all_perfect_matchings(g);
  r.perfect_matching_count = static_cast<int>(pms.size());
  if (pms.size() == 1) r.unique_pm = pms.front();
  r.unique_pm_flag = pms.size() == 1;
  r.very_well_covered = g.order() > 0 && r.unmixed && r.no_isolated && 2 * r.alpha0 == g.order();
  r.no_duplicates = duplicated_vertex_pairs(g).empty();
  r.induced_4cycles_ok = true;
  for (const FourCycle& c : four_cycles(g)) {
    if (!c.chordless) continue;
    if (four_cycle_P_report(g, family, c.v).all_edges_p) r.induced_4cycles_ok = false;
  }
  if (r.unmixed) {
    const CoverGraph cg = build_cover_graph(g, family);
    r.gj_connected = cg.connected();
    if (g.has_edges()) r.linearly_presented = is_linearly_presented(cg).linearly_presented;
  }
  if (r.is_konig && r.unmixed && r.no_isolated) r.cm = cm_konig(g);
  return r;
}

CmStructure cm_konig_structure(const SimpleGraph& g) {
  if (!cm_konig(g)) throw PreconditionError("graph is not Cohen-Macaulay");
  CmStructure s;
  const std::vector<Matching> pms = all_perfect_matchings(g);
  s.perfect_matching = pms.front();
  const CoverFamily family = minimal_vertex_covers(g);
  s.exchange_edges = exchange_edges(g, family);
  check_invariant(s.perfect_matching == s.exchange_edges,
                  "perfect matching differs from the exchange edges on " + g.to_string());
  const auto sides = build_cover_graph(g, family).bipartition();
  check_invariant(sides.has_value(), "cover graph of a Cohen-Macaulay Konig graph is not bipartite");
  s.cover_graph_sides = *sides;
  return s;
}

SymDiffReport sym_diff_analysis(const SimpleGraph& g, int i, int j) {
  return sym_diff_analysis(g, minimal_vertex_covers(g), i, j);
}

SymDiffReport sym_diff_analysis(const SimpleGraph& g, const CoverFamily& family, int i, int j) {
  if (!family.unmixed) throw PreconditionError("symmetric-difference analysis needs an unmixed graph");
  if (i < 0 || j < 0 || i >= family.size() || j >= family.size())
    throw PreconditionError("cover index out of range");
  if (i == j) throw PreconditionError("symmetric-difference analysis needs two distinct covers");

  SymDiffReport r;
  r.i = i;
  r.j = j;
  const VertexSet ci = family[i], cj = family[j];
  r.b1 = ci - cj;
  r.b2 = cj - ci;
  r.sub = induced_subgraph(g, ci ^ cj);
  r.bipartition_ok = g.is_stable(r.b1) && g.is_stable(r.b2);
  r.sub_alpha0 = covering_number(r.sub.graph);
  r.sizes_ok = r.b1.size() == r.b2.size() && r.b1.size() == r.sub_alpha0;
  const std::vector<Matching> pms = all_perfect_matchings(r.sub.graph);
  if (!pms.empty()) {
    Matching lifted;
    for (const Edge& e : pms.front()) lifted.emplace_back(r.sub.to_parent[e.u], r.sub.to_parent[e.v]);
    std::sort(lifted.begin(), lifted.end());
    r.perfect_matching = lifted;
  }
  const CoverFamily sub_family = minimal_vertex_covers(r.sub.graph);
  r.unmixed = sub_family.unmixed;
  r.no_isolated = r.sub.graph.isolated_vertices().empty();
  if (r.unmixed && r.no_isolated && is_konig(r.sub.graph)) r.cm = cm_konig(r.sub.graph);

  const VertexSet common = ci & cj, both = ci | cj;
  for (VertexSet c : family.covers)
    if (!common.is_subset_of(c) && c.is_subset_of(both)) {
      r.witness_cover = c;
      break;
    }
  return r;
}

bool induced_subgraphs_with_edges_connected(const SimpleGraph& g) {
  const int n = g.order();
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    const InducedSubgraph h = induced_subgraph(g, VertexSet(bits));
    if (h.graph.has_edges() && !is_connected(h.graph)) return false;
  }
  return true;
}

FamilyMembership family_membership(const SimpleGraph& g) {
  FamilyMembership m;
  const CoverFamily family = minimal_vertex_covers(g);
  m.u = family.unmixed;
  if (!m.u) return m;

  m.u5 = true;
  m.u1 = true;
  for (const FourCycle& c : four_cycles(g)) {
    if (!c.chordless) continue;
    m.u5 = false;
    if (four_cycle_P_report(g, family, c.v).all_edges_p) m.u1 = false;
  }
  m.u2 = duplicated_vertex_pairs(g).empty();
  const CoverGraph cg = build_cover_graph(g, family);
  m.u3 = cg.connected();
  if (!g.has_edges()) {
    m.u4 = true;
    return m;
  }
  m.u4 = is_linearly_presented(cg).linearly_presented;
  try {
    MinorOptions options;
    options.budget = 200'000;
    const SyzygyDecision d = is_linearly_presented_via_syzygy(cg, options);
    check_invariant(d.linearly_presented == m.u4, "syzygy criterion disagrees on " + g.to_string());
  } catch (const ResourceError&) {
    // Too many minors for a side check; the primary criterion stands.
  }
  return m;
}

}  // namespace coverlab
