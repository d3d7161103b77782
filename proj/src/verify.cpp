#include "coverlab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "coverlab/classify.hpp"
#include "coverlab/cover_graph.hpp"
#include "coverlab/covers.hpp"
#include "coverlab/enumerate.hpp"
#include "coverlab/errors.hpp"
#include "coverlab/syzygy.hpp"
#include "coverlab/vnumber.hpp"

namespace coverlab {

namespace {

struct Instance {
  SimpleGraph graph;
  std::vector<SimpleGraph> parts;
};

using Outcome = InstanceOutcome;
using Check = std::function<Outcome(const Instance&, const SuiteOptions&)>;
using Source = std::function<void(int n, const SuiteOptions&, const std::function<void(Instance)>&)>;

struct Suite {
  SuiteInfo info;
  bool single_pass = false;  // the source ignores n and runs once
  Source source;
  Check check;
};

Outcome not_applicable() { return {}; }
Outcome pass() { return {true, false, std::nullopt}; }
Outcome fail(std::string why) { return {true, false, std::move(why)}; }

std::string yn(bool b) { return b ? "true" : "false"; }

// Every vertex cover of g, not only the minimal ones.
std::vector<VertexSet> all_covers(const SimpleGraph& g) {
  std::vector<VertexSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.order()); ++bits)
    if (g.is_vertex_cover(VertexSet(bits))) out.emplace_back(bits);
  return out;
}

bool is_tree(const CoverGraph& cg) {
  return cg.order() >= 1 && cg.connected() && static_cast<int>(cg.edges.size()) == cg.order() - 1;
}

Source enumeration_source() {
  return [](int n, const SuiteOptions& o, const std::function<void(Instance)>& sink) {
    GraphEnumeration spec;
    spec.n = n;
    spec.dedup_isomorphic = o.dedup;
    enumerate_graphs(spec, [&](const SimpleGraph& g) { sink(Instance{g, {}}); });
  };
}

// ---- individual checks ----------------------------------------------------

Outcome check_exchange_equivalence(const Instance& in, const SuiteOptions&) {
  const SimpleGraph& g = in.graph;
  for (VertexSet c : all_covers(g)) {
    const ExchangeConditions x = exchange_conditions(g, c);
    if (x.a.has_value() != x.b.has_value() || x.b.has_value() != x.c.has_value())
      return fail("conditions disagree on cover " + c.to_string() + ": a=" + yn(x.a.has_value()) +
                  " b=" + yn(x.b.has_value()) + " c=" + yn(x.c.has_value()));
    if (!x.a) continue;
    for (const ExchangeWitness* w : {&*x.a, &*x.b, &*x.c}) {
      const bool shape = c.contains(w->out_vertex) && !c.contains(w->in_vertex) &&
                         g.adjacent(w->out_vertex, w->in_vertex);
      if (!shape) return fail("malformed witness " + w->edge().to_string() + " for cover " + c.to_string());
    }
    if (g.neighbors(x.a->out_vertex) - c != VertexSet::singleton(x.a->in_vertex))
      return fail("witness (a) does not isolate one outside neighbor for " + c.to_string());
    if (!g.is_vertex_cover(x.b->swapped()) || !g.is_vertex_cover(x.c->swapped()))
      return fail("swap of witness (b) or (c) is not a cover for " + c.to_string());
  }
  return pass();
}

Outcome check_v_lower_bound(const Instance& in, const SuiteOptions&) {
  const SimpleGraph& g = in.graph;
  if (!g.has_edges()) return not_applicable();
  const CoverFamily f = minimal_vertex_covers(g);
  const int v = v_cover_ideal(g);
  int brute = -1;
  bool at_alpha0 = false;
  for (VertexSet c : all_covers(g)) {
    if (!has_exchange_property(g, c)) continue;
    if (brute < 0 || c.size() < brute) brute = c.size();
    if (c.size() == f.alpha0) at_alpha0 = true;
  }
  if (v != brute - 1)
    return fail("v = " + std::to_string(v) + " but the smallest exchange cover has " + std::to_string(brute) +
                " vertices");
  if (v < f.alpha0 - 1) return fail("v = " + std::to_string(v) + " below alpha0 - 1");
  if ((v == f.alpha0 - 1) != at_alpha0)
    return fail("v = alpha0 - 1 is " + yn(v == f.alpha0 - 1) + " but a smallest cover with the exchange property " +
                (at_alpha0 ? "exists" : "does not exist"));
  return pass();
}

Outcome check_vmax_6way(const Instance& in, const SuiteOptions&) {
  const SimpleGraph& g = in.graph;
  if (!g.has_edges()) return not_applicable();
  const int s = g.order();
  const int v = v_cover_ideal(g);
  const bool a = v == s - 2;
  const bool b = a && is_codi_graph(g);
  bool c = true;
  for (VertexSet cover : all_covers(g))
    if (has_exchange_property(g, cover) && cover.size() != s - 1) c = false;
  bool d = true;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << s) && d; ++bits) {
    const InducedSubgraph h = induced_subgraph(g, VertexSet(bits));
    if (h.graph.has_edges() && v_cover_ideal(h.graph) != h.graph.order() - 2) d = false;
  }
  const bool e = induced_subgraphs_with_edges_connected(g);
  const bool f = multipartite_shape(g).has_value();
  if (!(a == b && b == c && c == d && d == e && e == f))
    return fail("a=" + yn(a) + " b=" + yn(b) + " c=" + yn(c) + " d=" + yn(d) + " e=" + yn(e) + " f=" + yn(f));
  if (a)
    for (const Edge& edge : g.edges()) {
      const int vp = v_p_cover_ideal(g, edge);
      if (vp != s - 2) return fail("v_p at " + edge.to_string() + " is " + std::to_string(vp) + ", not s - 2");
    }
  return pass();
}

void join_source(int nmax, const SuiteOptions&, const std::function<void(Instance)>& sink) {
  std::mt19937_64 rng(20240417);
  auto random_graph = [&](int n, bool need_edges) {
    std::bernoulli_distribution coin(0.5);
    for (;;) {
      std::vector<Edge> edges;
      for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
          if (coin(rng)) edges.emplace_back(u, w);
      SimpleGraph g = SimpleGraph::from_edges(n, edges);
      if (!need_edges || g.has_edges()) return g;
    }
  };
  const int top = std::max(nmax, 3);
  for (int k = 0; k < 1000; ++k) {
    SimpleGraph g1, g2, j;
    // The formula excludes complete multipartite joins; draw again.
    do {
      const int n1 = std::uniform_int_distribution<int>(2, top - 1)(rng);
      const int n2 = std::uniform_int_distribution<int>(1, top - n1)(rng);
      g1 = random_graph(n1, true);
      g2 = random_graph(n2, false);
      j = join(g1, g2);
    } while (multipartite_shape(j));
    sink(Instance{std::move(j), {std::move(g1), std::move(g2)}});
  }
}

Outcome check_join_formula(const Instance& in, const SuiteOptions&) {
  const SimpleGraph& g1 = in.parts.at(0);
  const SimpleGraph& g2 = in.parts.at(1);
  if (multipartite_shape(in.graph)) return not_applicable();
  const int v = v_cover_ideal(in.graph);
  const int n1 = g1.order(), n2 = g2.order();
  int expected;
  if (g2.has_edges())
    expected = std::min(v_cover_ideal(g1) + n2, v_cover_ideal(g2) + n1);
  else
    expected = v_cover_ideal(g1) + n2;
  if (v != expected)
    return fail("join of " + g1.to_string() + " (" + std::to_string(n1) + " vertices) and " + g2.to_string() + " (" +
                std::to_string(n2) + " vertices): v = " + std::to_string(v) + ", formula gives " +
                std::to_string(expected));
  return pass();
}

Outcome check_gj_edges(const Instance& in, const SuiteOptions&) {
  const SimpleGraph& g = in.graph;
  if (!g.has_edges()) return not_applicable();
  const CoverFamily f = minimal_vertex_covers(g);
  if (!f.unmixed) return not_applicable();
  const CoverGraph cg = build_cover_graph(g, f);
  for (int i = 0; i < f.size(); ++i)
    for (int j = i + 1; j < f.size(); ++j) {
      const bool by_union = (f[i] | f[j]).size() == f.alpha0 + 1;
      const bool by_meet = (f[i] & f[j]).size() == f.alpha0 - 1;
      if (by_union != by_meet || by_union != cg.adjacent(i, j))
        return fail("adjacency forms disagree on " + f[i].to_string() + ", " + f[j].to_string());
    }
  for (const CoverGraphEdge& e : cg.edges) {
    if (!g.adjacent(e.out_vertex, e.in_vertex))
      return fail("witness " + e.witness().to_string() + " is not an edge of the graph");
    if (f[e.j] != f[e.i].without(e.out_vertex).with(e.in_vertex))
      return fail("witness " + e.witness().to_string() + " does not turn " + f[e.i].to_string() + " into " +
                  f[e.j].to_string());
  }
  return pass();
}

Outcome check_gj_nondiscrete(const Instance& in, const SuiteOptions&) {
  const SimpleGraph& g = in.graph;
  if (!g.has_edges()) return not_applicable();
  const CoverFamily f = minimal_vertex_covers(g);
  if (!f.unmixed) return not_applicable();
  const CoverGraph cg = build_cover_graph(g, f);
  const int v = v_cover_ideal(g);
  if ((v == f.alpha0 - 1) != !cg.edges.empty())
    return fail("v = " + std::to_string(v) + ", alpha0 = " + std::to_string(f.alpha0) + ", cover graph has " +
                std::to_string(cg.edges.size()) + " edges");
  if (cg.connected()) {
    for (VertexSet c : f.covers)
      if (!has_exchange_property(g, c)) return fail("connected cover graph but " + c.to_string() + " has no exchange");
  }
  if (is_linearly_presented(cg).linearly_presented && !cg.connected())
    return fail("linearly presented with a disconnected cover graph");
  return pass();
}

Outcome check_rank_qc(const Instance& in, const SuiteOptions&) {
  const SimpleGraph& g = in.graph;
  const CoverFamily f = minimal_vertex_covers(g);
  if (!f.unmixed) return not_applicable();
  const CoverGraph cg = build_cover_graph(g, f);
  const LinearSyzygyMatrix m = build_ls_matrix(cg);
  std::vector<std::vector<std::int64_t>> a;
  for (const auto& row : m.numerical()) a.emplace_back(row.begin(), row.end());
  const int rank = m.cols() == 0 ? 0 : exact_integer_rank(a);
  const int expected = cg.order() - cg.component_count();
  if (rank != expected)
    return fail("rank " + std::to_string(rank) + " but rows - components = " + std::to_string(expected));
  if (numerical_rank(m) != rank) return fail("numerical_rank differs from the direct elimination");
  return pass();
}

Outcome check_minors_monomial(const Instance& in, const SuiteOptions& o) {
  const SimpleGraph& g = in.graph;
  if (!g.has_edges()) return not_applicable();
  const CoverFamily f = minimal_vertex_covers(g);
  if (!f.unmixed) return not_applicable();
  const LinearSyzygyMatrix m = build_ls_matrix(build_cover_graph(g, f));
  const int rank = m.cols() == 0 ? 0 : numerical_rank(m);
  const int top = std::min(m.rows, m.cols());
  // Unpruned sweep per size. Past its budget, sizes up to the rank fall back
  // to forest column sets (cycles give dependent columns); larger sizes end
  // the sweep, the rank itself being checked by rank-qc.
  const std::uint64_t sweep = std::min<std::uint64_t>(o.minor_budget, 200'000);
  auto count = [](const Monomial&) { return true; };
  for (int k = 1; k <= top; ++k) {
    MinorStats st;
    try {
      st = for_each_minor(m, k, MinorOptions{sweep, false}, count);
    } catch (const ResourceError&) {
      if (k > rank) break;
      st = for_each_minor(m, k, MinorOptions{o.minor_budget, true}, [](const Monomial&) { return false; });
    }
    if (k > rank && st.nonzero > 0)
      return fail(std::to_string(st.nonzero) + " nonzero minors of size " + std::to_string(k) + " above rank " +
                  std::to_string(rank));
    if (k <= rank && st.nonzero == 0)
      return fail("no nonzero minor of size " + std::to_string(k) + " at rank " + std::to_string(rank));
  }
  return pass();
}

Outcome check_lp_cross(const Instance& in, const SuiteOptions& o) {
  const SimpleGraph& g = in.graph;
  if (!g.has_edges()) return not_applicable();
  const CoverFamily f = minimal_vertex_covers(g);
  if (!f.unmixed) return not_applicable();
  const CoverGraph cg = build_cover_graph(g, f);
  const bool restricted = is_linearly_presented(cg).linearly_presented;
  MinorOptions options;
  options.budget = o.minor_budget;
  const SyzygyDecision d = is_linearly_presented_via_syzygy(cg, options);
  if (d.linearly_presented != restricted)
    return fail("restricted connectivity says " + yn(restricted) + ", rank " + std::to_string(d.rank) + " of " +
                std::to_string(d.rows) + " rows with minor height at least two " + yn(d.height_at_least_two));
  if (d.rank_ok != cg.connected()) return fail("rank = rows - 1 disagrees with connectivity");
  return pass();
}

Outcome check_strong_triangles(const Instance& in, const SuiteOptions&) {
  const SimpleGraph& g = in.graph;
  if (!g.has_edges()) return not_applicable();
  const CoverFamily f = minimal_vertex_covers(g);
  if (!f.unmixed) return not_applicable();
  const CoverGraph cg = build_cover_graph(g, f);
  const std::vector<StrongTriangle> st = strong_triangles(cg);
  const std::vector<ColumnRedundancy> red = column_redundancies(build_ls_matrix(cg));
  if (st.empty() != red.empty())
    return fail(std::to_string(st.size()) + " strong triangles but " + std::to_string(red.size()) +
                " columns that are differences of two others");
  return pass();
}

Outcome check_exchange_cover(const Instance& in, const SuiteOptions&) {
  const SimpleGraph& g = in.graph;
  if (!g.has_edges() || !g.isolated_vertices().empty()) return not_applicable();
  const CoverFamily f = minimal_vertex_covers(g);
  if (!f.unmixed) return not_applicable();
  if (!build_cover_graph(g, f).connected()) return not_applicable();
  VertexSet covered;
  for (const Edge& e : exchange_edges(g, f)) covered |= e.as_set();
  if (covered != g.vertices()) return fail("exchange edges miss " + (g.vertices() - covered).to_string());
  return pass();
}

Outcome check_gj_bipartite(const Instance& in, const SuiteOptions&) {
  const SimpleGraph& g = in.graph;
  if (!g.has_edges() || !g.isolated_vertices().empty() || !is_bipartite(g)) return not_applicable();
  const CoverFamily f = minimal_vertex_covers(g);
  if (!f.unmixed) return not_applicable();
  if (!build_cover_graph(g, f).bipartition()) return fail("cover graph is not bipartite");
  return pass();
}

void hr_source(int nmax, const SuiteOptions&, const std::function<void(Instance)>& sink) {
  for (int r = 1; r <= nmax; ++r) sink(Instance{matching_graph(r), {}});
}

Outcome check_hr_structure(const Instance& in, const SuiteOptions&) {
  const int r = in.graph.order() / 2;
  const CoverGraph cg = build_cover_graph(in.graph);
  const std::size_t vertices = std::size_t{1} << r;
  const std::size_t edges = static_cast<std::size_t>(r) << (r - 1);
  if (static_cast<std::size_t>(cg.order()) != vertices || cg.edges.size() != edges)
    return fail("H_" + std::to_string(r) + ": cover graph has " + std::to_string(cg.order()) + " vertices and " +
                std::to_string(cg.edges.size()) + " edges");
  if (!cg.bipartition()) return fail("H_" + std::to_string(r) + ": cover graph not bipartite");
  if (!cg.is_regular(r)) return fail("H_" + std::to_string(r) + ": cover graph not regular of degree r");
  return pass();
}

Outcome check_p_dual(const Instance& in, const SuiteOptions&) {
  const SimpleGraph& g = in.graph;
  if (!g.has_edges()) return not_applicable();
  const CoverFamily f = minimal_vertex_covers(g);
  for (const Edge& e : g.edges())
    if (p_property_by_definition(g, e) != p_property_by_covers(f, e))
      return fail("(P) forms disagree on " + e.to_string());
  for (const Matching& pm : all_perfect_matchings(g)) {
    const bool all_p = std::all_of(pm.begin(), pm.end(), [&](const Edge& e) { return p_property_by_covers(f, e); });
    if (all_p && (!f.unmixed || f.alpha0 != static_cast<int>(pm.size())))
      return fail("perfect matching with (P) edges but unmixed = " + yn(f.unmixed) + ", alpha0 = " +
                  std::to_string(f.alpha0));
  }
  if (const auto shape = multipartite_shape(g); shape && shape->parts.size() >= 2) {
    const bool two = shape->parts.size() == 2;
    for (const Edge& e : g.edges())
      if (p_property_by_definition(g, e) != two)
        return fail("complete multipartite with " + std::to_string(shape->parts.size()) + " parts, edge " +
                    e.to_string() + " has (P) = " + yn(!two));
    if (f.unmixed != shape->homogeneous) return fail("complete multipartite: unmixed differs from homogeneous");
  }
  return pass();
}

Outcome check_4cycle_3way(const Instance& in, const SuiteOptions&) {
  const SimpleGraph& g = in.graph;
  const std::vector<FourCycle> cycles = four_cycles(g);
  if (cycles.empty()) return not_applicable();
  const CoverFamily f = minimal_vertex_covers(g);
  for (const FourCycle& c : cycles) {
    const FourCyclePReport r = four_cycle_P_report(g, f, c.v);
    if (!(r.all_edges_p == r.disjoint_pair_p && r.disjoint_pair_p == r.meets_every_cover_twice))
      return fail("4-cycle conditions disagree");
    if (!c.chordless && r.all_edges_p) return fail("chorded 4-cycle with all edges (P)");
  }
  return pass();
}

Outcome check_konig_6way(const Instance& in, const SuiteOptions&) {
  const SimpleGraph& g = in.graph;
  if (!g.has_edges() || !g.isolated_vertices().empty()) return not_applicable();
  const CoverFamily f = minimal_vertex_covers(g);
  if (!f.unmixed || maximum_matching_size(g) != f.alpha0) return not_applicable();
  const KonigReport r = konig_pm_analysis(g);
  const bool a = r.cm.value(), b = r.linearly_presented.value(), c = r.gj_connected.value();
  const bool d = r.no_duplicates, e = r.induced_4cycles_ok, fl = r.unique_pm_flag;
  if (!(a == b && b == c && c == d && d == e && e == fl))
    return fail("cm=" + yn(a) + " lp=" + yn(b) + " connected=" + yn(c) + " no-duplicates=" + yn(d) +
                " induced-4=" + yn(e) + " unique-pm=" + yn(fl));
  return pass();
}

Outcome check_cm_structure(const Instance& in, const SuiteOptions&) {
  const SimpleGraph& g = in.graph;
  if (!g.has_edges() || !g.isolated_vertices().empty()) return not_applicable();
  const CoverFamily f = minimal_vertex_covers(g);
  if (!f.unmixed || maximum_matching_size(g) != f.alpha0 || !cm_konig(g)) return not_applicable();
  const CmStructure s = cm_konig_structure(g);
  if (s.perfect_matching != s.exchange_edges) return fail("perfect matching differs from exchange edges");
  if (!has_free_vertex(g)) return fail("no vertex of degree one");
  if (!is_very_well_covered(g)) return fail("not very well-covered");
  return pass();
}

Outcome check_nolinear_nocm(const Instance& in, const SuiteOptions&) {
  const SimpleGraph& g = in.graph;
  if (!g.has_edges()) return not_applicable();
  const CoverFamily f = minimal_vertex_covers(g);
  if (!f.unmixed) return not_applicable();
  bool witness = false;
  for (int i = 0; i < f.size(); ++i)
    for (int j = i + 1; j < f.size(); ++j) {
      const SymDiffReport r = sym_diff_analysis(g, f, i, j);
      if (!r.bipartition_ok || !r.sizes_ok || !r.perfect_matching)
        return fail("symmetric difference of " + f[i].to_string() + " and " + f[j].to_string() +
                    " lacks the balanced bipartition with a perfect matching");
      if (r.unmixed && r.no_isolated && r.cm == false) witness = true;
    }
  const bool lp = is_linearly_presented(build_cover_graph(g, f)).linearly_presented;
  if (!lp && !witness) return fail("not linearly presented, yet every unmixed symmetric difference is Cohen-Macaulay");
  return pass();
}

Outcome check_no_induced_4(const Instance& in, const SuiteOptions&) {
  const SimpleGraph& g = in.graph;
  if (!g.has_edges()) return not_applicable();
  const CoverFamily f = minimal_vertex_covers(g);
  if (!f.unmixed) return not_applicable();
  const std::vector<FourCycle> cycles = four_cycles(g);
  if (std::any_of(cycles.begin(), cycles.end(), [](const FourCycle& c) { return c.chordless; }))
    return not_applicable();
  if (!is_linearly_presented(build_cover_graph(g, f)).linearly_presented) return fail("not linearly presented");
  if (v_cover_ideal(g) != f.alpha0 - 1) return fail("v differs from alpha0 - 1");
  return pass();
}

Outcome check_witness_cover(const Instance& in, const SuiteOptions&) {
  const SimpleGraph& g = in.graph;
  if (!g.has_edges()) return not_applicable();
  const CoverFamily f = minimal_vertex_covers(g);
  if (!f.unmixed || !is_linearly_presented(build_cover_graph(g, f)).linearly_presented) return not_applicable();
  bool any = false;
  for (int i = 0; i < f.size(); ++i)
    for (int j = i + 1; j < f.size(); ++j) {
      const SymDiffReport r = sym_diff_analysis(g, f, i, j);
      if (!r.unmixed) continue;
      if (!r.cm) return fail("unmixed symmetric difference without a Cohen-Macaulay verdict");
      if (*r.cm) continue;
      any = true;
      if (!r.witness_cover)
        return fail("no cover between " + f[i].to_string() + " and " + f[j].to_string() + " avoiding their meet");
    }
  return any ? pass() : not_applicable();
}

Outcome check_no_3_5(const Instance& in, const SuiteOptions&) {
  const SimpleGraph& g = in.graph;
  if (!g.has_edges() || has_3_cycle(g) || has_5_cycle(g)) return not_applicable();
  const CoverFamily f = minimal_vertex_covers(g);
  if (!f.unmixed) return not_applicable();
  const bool lp = is_linearly_presented(build_cover_graph(g, f)).linearly_presented;
  bool all_cm = true;
  for (int i = 0; i < f.size(); ++i)
    for (int j = i + 1; j < f.size(); ++j) {
      const SymDiffReport r = sym_diff_analysis(g, f, i, j);
      if (!r.unmixed) continue;
      if (!r.cm) return fail("unmixed symmetric difference without a Cohen-Macaulay verdict");
      if (!*r.cm) all_cm = false;
    }
  if (lp != all_cm) return fail("linearly presented = " + yn(lp) + ", unmixed symmetric differences CM = " + yn(all_cm));
  return pass();
}

Outcome check_family_chain(const Instance& in, const SuiteOptions&) {
  const SimpleGraph& g = in.graph;
  if (!g.has_edges() || !g.isolated_vertices().empty()) return not_applicable();
  const FamilyMembership m = family_membership(g);
  const bool chain = (!m.u5 || m.u4) && (!m.u4 || m.u3) && (!m.u3 || m.u2) && (!m.u2 || m.u1) && (!m.u1 || m.u);
  if (!chain)
    return fail("membership u=" + yn(m.u) + " u1=" + yn(m.u1) + " u2=" + yn(m.u2) + " u3=" + yn(m.u3) +
                " u4=" + yn(m.u4) + " u5=" + yn(m.u5));
  if (m.u3) {
    const CoverFamily f = minimal_vertex_covers(g);
    for (const FourCycle& c : four_cycles(g))
      if (four_cycle_P_report(g, f, c.v).all_edges_p) return fail("connected cover graph with an all-(P) 4-cycle");
  }
  return pass();
}

Outcome check_apr17(const Instance& in, const SuiteOptions&) {
  const SimpleGraph& g = in.graph;
  if (!g.has_edges()) return not_applicable();
  const int s = g.order();
  const CoverFamily f = minimal_vertex_covers(g);
  const std::uint64_t limit = std::uint64_t{1} << s;
  auto blocker_stable = [&](VertexSet a) {
    return std::none_of(f.covers.begin(), f.covers.end(), [&](VertexSet c) { return c.is_subset_of(a); });
  };
  // Minimal covers of the blocker, by brute force.
  std::set<VertexSet> blocker_covers;
  std::vector<VertexSet> meets_all;
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    const VertexSet b(bits);
    if (std::all_of(f.covers.begin(), f.covers.end(), [&](VertexSet c) { return c.intersects(b); }))
      meets_all.push_back(b);
  }
  for (VertexSet b : meets_all)
    if (std::none_of(meets_all.begin(), meets_all.end(), [&](VertexSet o) { return o != b && o.is_subset_of(b); }))
      blocker_covers.insert(b);
  std::set<VertexSet> family_f, family_a;
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    const VertexSet a(bits);
    if (!blocker_stable(a)) continue;
    bool maximal = true;
    for (int t : g.vertices() - a)
      if (blocker_stable(a.with(t))) maximal = false;
    if (maximal) family_f.insert(a);
    if (blocker_covers.count(blocker_neighbor_set(f, a))) family_a.insert(a);
  }
  const bool lhs = v_cover_ideal(g) == s - 2;
  const bool rhs = family_f == family_a;
  if (lhs != rhs)
    return fail("v = s - 2 is " + yn(lhs) + " while the two families are " + (rhs ? "equal" : "different"));
  return pass();
}

Outcome check_tree_lp(const Instance& in, const SuiteOptions&) {
  const SimpleGraph& g = in.graph;
  if (!g.has_edges()) return not_applicable();
  const CoverFamily f = minimal_vertex_covers(g);
  if (!f.unmixed) return not_applicable();
  const CoverGraph cg = build_cover_graph(g, f);
  if (!is_tree(cg)) return not_applicable();
  const bool lp = is_linearly_presented(cg).linearly_presented;
  const TreeCheck t = tree_linear_presentation_check(g);
  if (t.tree_criterion != lp || t.restricted_criterion != lp)
    return fail("tree criterion " + yn(t.tree_criterion) + ", linear presentation " + yn(lp));
  return pass();
}

Outcome check_path_lp(const Instance& in, const SuiteOptions&) {
  const SimpleGraph& g = in.graph;
  if (!g.has_edges() || !g.isolated_vertices().empty()) return not_applicable();
  const CoverFamily f = minimal_vertex_covers(g);
  if (!f.unmixed) return not_applicable();
  const CoverGraph cg = build_cover_graph(g, f);
  if (!is_tree(cg)) return not_applicable();
  const TreeCheck t = tree_linear_presentation_check(g);
  if (!t.is_path) return not_applicable();
  const bool lp = is_linearly_presented(cg).linearly_presented;
  if (t.path_criterion != lp)
    return fail("path conditions a=" + yn(t.path_a) + " b=" + yn(t.path_b) + " c=" + yn(t.path_c) +
                ", linear presentation " + yn(lp));
  return pass();
}

Outcome check_saha(const Instance& in, const SuiteOptions&) {
  const SimpleGraph& g = in.graph;
  if (!g.has_edges()) return not_applicable();
  const CoverFamily f = minimal_vertex_covers(g);
  bool any = false;
  for (const Edge& e : g.edges())
    for (auto [k, l] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (!g.neighbors(k).is_subset_of(g.closed_neighbors(l))) continue;
      any = true;
      const bool found = std::any_of(f.covers.begin(), f.covers.end(), [&](VertexSet c) {
        return g.neighbors(k) - c == VertexSet::singleton(l);
      });
      if (!found)
        return fail("N(t" + std::to_string(k + 1) + ") inside N[t" + std::to_string(l + 1) +
                    "] but no minimal cover leaves exactly t" + std::to_string(l + 1) + " outside");
    }
  return any ? pass() : not_applicable();
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = [] {
    const Source e = enumeration_source();
    std::vector<Suite> s;
    auto add = [&](std::string name, std::string statement, int nmax, Check check, Source src = {},
                   bool single = false) {
      s.push_back(Suite{{std::move(name), std::move(statement), nmax}, single, src ? src : e, std::move(check)});
    };
    add("exchange-equivalence", "the three forms of the exchange property agree on every vertex cover", 8,
        check_exchange_equivalence);
    add("v-lower-bound", "v = alpha_e - 1 >= alpha0 - 1, with equality iff a smallest cover has the exchange property",
        8, check_v_lower_bound);
    add("vmax-6way", "v = s - 2, codi with v = s - 2, exchange covers of size s - 1, hereditary v, connected induced "
        "subgraphs and complete multipartite are equivalent; then every v_p = s - 2", 8, check_vmax_6way);
    add("join-formula", "v of a join that is not complete multipartite is min(v1 + |V2|, v2 + |V1|), and v1 + |V2| "
        "when the second graph is discrete (1000 random joins)", 8, check_join_formula, join_source, true);
    add("gj-edges", "cover-graph adjacency by union and by intersection agree, and every edge is a single exchange "
        "along an edge of the graph", 8, check_gj_edges);
    add("gj-nondiscrete", "for unmixed graphs v = alpha0 - 1 iff the cover graph has an edge; connectivity gives the "
        "exchange property everywhere; linear presentation implies connectivity", 8, check_gj_nondiscrete);
    add("rank-qc", "rank of the numerical syzygy matrix equals covers minus cover-graph components", 8, check_rank_qc);
    add("minors-monomial", "every minor of the linear syzygy matrix is a signed monomial, nonzero exactly up to the "
        "rank", 7, check_minors_monomial);
    add("lp-cross-check", "restricted connectivity and rank plus minor height decide linear presentation alike", 7,
        check_lp_cross);
    add("strong-triangles", "strong triangles exist iff some syzygy column is a difference of two others", 8,
        check_strong_triangles);
    add("exchange-cover", "with a connected cover graph and no isolated vertices the exchange edges cover V", 8,
        check_exchange_cover);
    add("gj-bipartite", "unmixed bipartite graphs without isolated vertices have a bipartite cover graph", 8,
        check_gj_bipartite);
    add("hr-structure", "the cover graph of r disjoint edges is bipartite, r-regular, with 2^r vertices and r 2^(r-1) "
        "edges", 7, check_hr_structure, hr_source, true);
    add("P-dual", "(P) by definition equals |e & C| = 1 for all minimal covers; (P) perfect matchings force "
        "unmixedness; complete multipartite edges have (P) iff there are two parts", 8, check_p_dual);
    add("4cycle-3way", "on every 4-cycle: all edges (P), two disjoint (P) edges and meeting every cover twice agree; "
        "then opposite neighborhoods coincide and the cycle is induced", 8, check_4cycle_3way);
    add("konig-6way", "for unmixed Konig graphs without isolated vertices: Cohen-Macaulay, linearly presented, "
        "connected cover graph, no duplicated vertices, induced 4-cycles with a non-(P) edge, unique perfect "
        "matching are equivalent", 8, check_konig_6way);
    add("cm-structure", "a Cohen-Macaulay Konig graph has its perfect matching equal to its exchange edges, a "
        "bipartite cover graph and a free vertex", 8, check_cm_structure);
    add("nolinear-nocm", "symmetric differences of covers are balanced bipartite with a perfect matching; without "
        "linear presentation one of them is unmixed and not Cohen-Macaulay", 8, check_nolinear_nocm);
    add("no-induced-4", "unmixed graphs without induced 4-cycles are linearly presented with v = alpha0 - 1", 8,
        check_no_induced_4);
    add("witness-cover", "linearly presented with an unmixed non-Cohen-Macaulay symmetric difference gives a cover "
        "inside the union that misses the meet", 8, check_witness_cover);
    add("no-3-5", "without 3- and 5-cycles, linear presentation iff every unmixed symmetric difference is "
        "Cohen-Macaulay", 8, check_no_3_5);
    add("family-chain", "no induced 4-cycle, linearly presented, connected cover graph, no duplicates, and induced "
        "4-cycles with a non-(P) edge form a chain inside the unmixed graphs", 8, check_family_chain);
    add("apr17", "v = s - 2 iff the maximal stable sets of the blocker are exactly its stable sets whose neighbor set "
        "is a minimal cover", 8, check_apr17);
    add("tree-lp", "when the cover graph is a tree, the path intersection counts decide linear presentation", 8,
        check_tree_lp);
    add("path-lp", "when the cover graph is a path and there are no isolated vertices, the endpoint conditions "
        "decide linear presentation", 8, check_path_lp);
    add("saha-exchange", "N(k) inside N[l] for an edge {k,l} gives a minimal cover C with N(k) - C = {l}", 8,
        check_saha);
    return s;
  }();
  return all;
}

const Suite& find_suite(const std::string& name) {
  for (const Suite& s : suites())
    if (s.info.name == name) return s;
  throw PreconditionError("unknown suite '" + name + "'");
}

Outcome guarded(const Suite& s, const Instance& in, const SuiteOptions& o) {
  try {
    return s.check(in, o);
  } catch (const ResourceError& e) {
    Outcome out;
    out.applicable = true;
    out.skipped = true;
    out.failure = e.what();
    return out;
  } catch (const InvariantViolation& e) {
    return fail(std::string("invariant violated: ") + e.what());
  } catch (const std::exception& e) {
    return fail(std::string("unexpected error: ") + e.what());
  }
}

}  // namespace

int worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("COVERLAB_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const Suite& s : suites()) out.push_back(s.info);
    return out;
  }();
  return infos;
}

bool is_known_suite(const std::string& name) {
  return std::any_of(suites().begin(), suites().end(), [&](const Suite& s) { return s.info.name == name; });
}

InstanceOutcome check_instance(const std::string& name, const SimpleGraph& g, const SuiteOptions& options) {
  const Suite& s = find_suite(name);
  if (s.single_pass) throw PreconditionError("suite '" + name + "' builds its own instances");
  return guarded(s, Instance{g, {}}, options);
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& options) {
  const Suite& suite = find_suite(name);
  VerificationReport report;
  report.suite = suite.info.name;
  report.statement = suite.info.statement;
  report.nmax = options.nmax > 0 ? options.nmax : suite.info.default_nmax;
  report.nmin = suite.single_pass ? report.nmax : 1;
  report.dedup = options.dedup;
  const int workers = worker_count(options.threads);
  std::map<int, std::uint64_t> by_order;

  std::vector<Instance> batch;
  auto flush = [&] {
    std::vector<Outcome> results(batch.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t k; (k = next.fetch_add(1)) < batch.size();) results[k] = guarded(suite, batch[k], options);
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers && static_cast<std::size_t>(w) < batch.size(); ++w) pool.emplace_back(work);
    work();
    for (std::thread& t : pool) t.join();
    for (std::size_t k = 0; k < batch.size(); ++k) {
      ++report.scanned;
      const Outcome& r = results[k];
      if (!r.applicable) continue;
      if (r.skipped) {
        ++report.skipped;
        report.skips.push_back({batch[k].graph, r.failure.value_or("")});
        continue;
      }
      ++report.instances;
      ++by_order[batch[k].graph.order()];
      if (r.failure) report.failures.push_back({batch[k].graph, *r.failure});
    }
    batch.clear();
  };
  for (int n = report.nmin; n <= report.nmax; ++n) {
    suite.source(n, options, [&](Instance in) {
      batch.push_back(std::move(in));
      if (batch.size() >= 4096) flush();
    });
    flush();
  }
  report.instances_by_order.assign(by_order.begin(), by_order.end());
  return report;
}

}  // namespace coverlab
