#include <algorithm>
#include <set>

#include "coverlab/classify.hpp"
#include "coverlab/cover_graph.hpp"
#include "coverlab/covers.hpp"
#include "coverlab/errors.hpp"
#include "coverlab/syzygy.hpp"
#include "coverlab/verify.hpp"
#include "coverlab/vnumber.hpp"

namespace coverlab {

namespace {

using Labels = std::vector<std::vector<int>>;

// 1-indexed edge list.
SimpleGraph graph_of(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> list;
  for (auto [u, v] : edges) list.emplace_back(u - 1, v - 1);
  return SimpleGraph::from_edges(n, list);
}

VertexSet set_of(const std::vector<int>& labels) {
  VertexSet s;
  for (int t : labels) s.insert(t - 1);
  return s;
}

// Order-independent rendering of a family of sets.
std::string family_string(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) { return a.to_vector() < b.to_vector(); });
  std::string s;
  for (VertexSet c : sets) s += (s.empty() ? "" : " ") + c.to_string();
  return s;
}

std::string family_string(const Labels& labels) {
  std::vector<VertexSet> sets;
  for (const auto& l : labels) sets.push_back(set_of(l));
  return family_string(sets);
}

std::string edges_string(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  std::string s;
  for (const Edge& e : edges) s += (s.empty() ? "" : " ") + e.to_string();
  return s;
}

std::string edges_string(std::initializer_list<std::pair<int, int>> labels) {
  std::vector<Edge> edges;
  for (auto [u, v] : labels) edges.emplace_back(u - 1, v - 1);
  return edges_string(edges);
}

std::string yn(bool b) { return b ? "true" : "false"; }

// Components of the cover graph as P<n>, C<n>, K1 or G<n,m>, sorted.
std::string shape_of(const CoverGraph& cg) {
  const std::vector<int> label = cg.component_labels();
  const int count = cg.component_count();
  std::vector<std::string> parts;
  for (int c = 0; c < count; ++c) {
    int n = 0, m2 = 0, maxdeg = 0;
    bool all_two = true;
    for (int v = 0; v < cg.order(); ++v) {
      if (label[v] != c) continue;
      ++n;
      const int d = static_cast<int>(cg.adj[v].size());
      m2 += d;
      maxdeg = std::max(maxdeg, d);
      all_two = all_two && d == 2;
    }
    const int m = m2 / 2;
    if (n == 1)
      parts.push_back("K1");
    else if (m == n - 1 && maxdeg <= 2)
      parts.push_back("P" + std::to_string(n));
    else if (m == n && all_two)
      parts.push_back("C" + std::to_string(n));
    else
      parts.push_back("G" + std::to_string(n) + "," + std::to_string(m));
  }
  std::sort(parts.begin(), parts.end());
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : "+") + p;
  return s;
}

// Consecutive covers in the list are adjacent in the cover graph.
bool is_cover_path(const CoverGraph& cg, const Labels& path) {
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    const int a = cg.family.index_of(set_of(path[k])), b = cg.family.index_of(set_of(path[k + 1]));
    if (a < 0 || b < 0 || !cg.adjacent(a, b)) return false;
  }
  return true;
}

// P4-free.
bool is_cograph(const SimpleGraph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b : g.neighbors(a))
      for (int c : g.neighbors(b)) {
        if (c == a || g.adjacent(a, c)) continue;
        for (int d : g.neighbors(c))
          if (d != b && !g.adjacent(d, a) && !g.adjacent(d, b)) return false;
      }
  return true;
}

std::string membership_string(const SimpleGraph& g) {
  const FamilyMembership m = family_membership(g);
  std::string s;
  const std::pair<const char*, bool> flags[] = {{"U", m.u},   {"U1", m.u1}, {"U2", m.u2},
                                                {"U3", m.u3}, {"U4", m.u4}, {"U5", m.u5}};
  for (auto [name, on] : flags)
    if (on) s += (s.empty() ? "" : ",") + std::string(name);
  return s.empty() ? "none" : s;
}

Expectation covers_exp(Labels covers, const char* src) {
  return {"minimal covers", family_string(covers), src,
          [](const SimpleGraph& g) { return family_string(minimal_vertex_covers(g).covers); }};
}

Expectation int_exp(std::string what, int value, const char* src, std::function<int(const SimpleGraph&)> f) {
  return {std::move(what), std::to_string(value), src, [f](const SimpleGraph& g) { return std::to_string(f(g)); }};
}

Expectation bool_exp(std::string what, bool value, const char* src, std::function<bool(const SimpleGraph&)> f) {
  return {std::move(what), yn(value), src, [f](const SimpleGraph& g) { return yn(f(g)); }};
}

Expectation str_exp(std::string what, std::string value, const char* src,
                    std::function<std::string(const SimpleGraph&)> f) {
  return {std::move(what), std::move(value), src, std::move(f)};
}

int alpha0_of(const SimpleGraph& g) { return minimal_vertex_covers(g).alpha0; }
int v_of(const SimpleGraph& g) { return v_cover_ideal(g); }
std::string gj_shape(const SimpleGraph& g) { return shape_of(build_cover_graph(g)); }
bool lp_restricted(const SimpleGraph& g) { return is_linearly_presented(g).linearly_presented; }
bool lp_syzygy(const SimpleGraph& g) { return is_linearly_presented_via_syzygy(g).linearly_presented; }

constexpr const char* kExample = "worked example";
constexpr const char* kFigure = "figure";
constexpr const char* kFormula = "structural formula";
constexpr const char* kExternal = "external formula";
constexpr const char* kBrute = "brute force";

SimpleGraph figure1() {
  return graph_of(10, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}, {2, 4}, {1, 5}, {5, 6}, {2, 6},
                       {1, 8}, {2, 9}, {3, 7}, {4, 10}, {7, 8}, {9, 10}, {8, 9}, {3, 9}, {4, 8}});
}

SimpleGraph figure2() { return graph_of(7, {{1, 2}, {2, 3}, {1, 3}, {2, 7}, {7, 6}, {6, 1}, {4, 5}, {3, 4}}); }

// C4 t1..t4 with pendant t_{i+4} at t_i.
SimpleGraph whiskered_c4() {
  return graph_of(8, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5}, {2, 6}, {3, 7}, {4, 8}});
}

std::vector<ExampleCase> make_examples() {
  std::vector<ExampleCase> out;

  {
    ExampleCase c{"c5", "5-cycle", cycle_graph(5), {}};
    c.expectations = {
        int_exp("alpha0", 3, kExample, alpha0_of),
        int_exp("v", 2, kExample, v_of),
        str_exp("cover graph", "C5", kExample, gj_shape),
        int_exp("strong triangles", 0, kExample, [](const SimpleGraph& g) {
          return static_cast<int>(strong_triangles(build_cover_graph(g)).size());
        }),
        bool_exp("{t1,t3,t4} is a minimal cover", true, kExample,
                 [](const SimpleGraph& g) { return is_minimal_cover(g, set_of({1, 3, 4})); }),
        str_exp("N(t3) - {t1,t3,t4}", "{t2}", kExample,
                [](const SimpleGraph& g) { return (g.neighbors(2) - set_of({1, 3, 4})).to_string(); }),
        int_exp("edges with N(k) inside N[l]", 0, kExample, [](const SimpleGraph& g) {
          int count = 0;
          for (const Edge& e : g.edges())
            for (auto [k, l] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}})
              if (g.neighbors(k).is_subset_of(g.closed_neighbors(l))) ++count;
          return count;
        }),
        int_exp("rank of the syzygy matrix", 4, kBrute, [](const SimpleGraph& g) { return numerical_rank(build_ls_matrix(g)); }),
        int_exp("v of the edge ideal", 2, kBrute, [](const SimpleGraph& g) { return v_edge_ideal(g); }),
    };
    out.push_back(std::move(c));
  }
  {
    ExampleCase c{"c7", "7-cycle", cycle_graph(7), {}};
    c.expectations = {
        int_exp("v", 3, kExample, v_of),
        int_exp("alpha0 - 1", 3, kExample, [](const SimpleGraph& g) { return alpha0_of(g) - 1; }),
        bool_exp("linearly presented (restricted connectivity)", true, kExample, lp_restricted),
        bool_exp("linearly presented (rank and minors)", true, kExample, lp_syzygy),
    };
    out.push_back(std::move(c));
  }
  {
    ExampleCase c{"join-c5-c5", "join of two 5-cycles", join(cycle_graph(5), cycle_graph(5)), {}};
    c.expectations = {
        int_exp("v", 7, kExample, v_of),
        bool_exp("codi-graph", true, kExample, is_codi_graph),
        bool_exp("cograph", false, kExample, is_cograph),
    };
    out.push_back(std::move(c));
  }
  {
    ExampleCase c{"join-c3-c5", "join of a triangle and a 5-cycle", join(cycle_graph(3), cycle_graph(5)), {}};
    c.expectations = {int_exp("v", 5, kExample, v_of)};
    out.push_back(std::move(c));
  }
  {
    ExampleCase c{"whiskered-c4", "4-cycle with a pendant edge at every vertex", whiskered_c4(), {}};
    c.expectations = {
        bool_exp("Konig", true, kExample, is_konig),
        bool_exp("Cohen-Macaulay", true, kExample, cm_konig),
        bool_exp("linearly presented", true, kExample, lp_restricted),
        int_exp("perfect matchings", 1, kExample,
                [](const SimpleGraph& g) { return static_cast<int>(all_perfect_matchings(g).size()); }),
        str_exp("perfect matching", edges_string({{1, 5}, {2, 6}, {3, 7}, {4, 8}}), kExample,
                [](const SimpleGraph& g) { return edges_string(all_perfect_matchings(g).front()); }),
        str_exp("exchange edges", edges_string({{1, 5}, {2, 6}, {3, 7}, {4, 8}}), kBrute,
                [](const SimpleGraph& g) { return edges_string(exchange_edges(g)); }),
        int_exp("induced 4-cycles", 1, kExample, [](const SimpleGraph& g) {
          const auto cycles = four_cycles(g);
          return static_cast<int>(std::count_if(cycles.begin(), cycles.end(), [](const FourCycle& c) { return c.chordless; }));
        }),
        bool_exp("pendant edge t1-t5 has (P)", true, kExample,
                 [](const SimpleGraph& g) { return edge_has_P_property(g, Edge(0, 4)); }),
        str_exp("families", "U,U1,U2,U3,U4", kExample, membership_string),
    };
    out.push_back(std::move(c));
  }
  {
    const Labels covers = {{2, 3, 4, 5, 8, 9},  {2, 3, 4, 5, 8, 10}, {1, 2, 3, 5, 8, 10}, {1, 2, 3, 6, 8, 10},
                           {1, 3, 4, 6, 8, 9},  {1, 3, 4, 6, 7, 9},  {1, 2, 4, 6, 7, 9},  {1, 2, 4, 5, 7, 9}};
    ExampleCase c{"figure-1", "10-vertex graph with a disconnected cover graph", figure1(), {}};
    c.expectations = {
        covers_exp(covers, kFigure),
        int_exp("alpha0", 6, kFigure, alpha0_of),
        str_exp("cover graph", "P4+P4", kFigure, gj_shape),
        bool_exp("C1-C2-C3-C4 and C5-C6-C7-C8 are paths", true, kFigure,
                 [covers](const SimpleGraph& g) {
                   const CoverGraph cg = build_cover_graph(g);
                   return is_cover_path(cg, Labels(covers.begin(), covers.begin() + 4)) &&
                          is_cover_path(cg, Labels(covers.begin() + 4, covers.end()));
                 }),
        str_exp("exchange edges", edges_string({{9, 10}, {1, 4}, {5, 6}, {7, 8}, {2, 3}}), kFigure,
                [](const SimpleGraph& g) { return edges_string(exchange_edges(g)); }),
        int_exp("v", 5, kFigure, v_of),
        int_exp("duplicated pairs", 0, kFigure,
                [](const SimpleGraph& g) { return static_cast<int>(duplicated_vertex_pairs(g).size()); }),
        bool_exp("Konig", false, kFigure, is_konig),
        bool_exp("every 4-cycle has an edge without (P)", true, kFigure,
                 [](const SimpleGraph& g) {
                   for (const FourCycle& f : four_cycles(g))
                     if (four_cycle_P_report(g, f.v).all_edges_p) return false;
                   return true;
                 }),
        int_exp("rank of the syzygy matrix", 6, kBrute, [](const SimpleGraph& g) { return numerical_rank(build_ls_matrix(g)); }),
        bool_exp("linearly presented (rank and minors)", false, kBrute, lp_syzygy),
        str_exp("families", "U,U1,U2", kExample, membership_string),
    };
    out.push_back(std::move(c));
  }
  {
    const Labels path = {{2, 3, 5, 6}, {2, 3, 4, 6}, {1, 2, 4, 6}, {1, 2, 4, 7}, {1, 3, 4, 7}, {1, 3, 5, 7}};
    ExampleCase c{"figure-2", "7-vertex graph whose cover graph is a path but not linearly presented", figure2(), {}};
    c.expectations = {
        covers_exp(path, kFigure),
        int_exp("alpha0", 4, kFigure, alpha0_of),
        str_exp("cover graph", "P6", kFigure, gj_shape),
        bool_exp("listed order is the path", true, kFigure,
                 [path](const SimpleGraph& g) { return is_cover_path(build_cover_graph(g), path); }),
        str_exp("restriction to (C1, C6)", "2 covers, 0 edges", kFigure,
                [path](const SimpleGraph& g) {
                  const CoverGraph cg = build_cover_graph(g);
                  const RestrictedSubgraph r = restricted_subgraph(cg, cg.family.index_of(set_of(path.front())),
                                                                   cg.family.index_of(set_of(path.back())));
                  return std::to_string(r.members.size()) + " covers, " + std::to_string(r.edges.size()) + " edges";
                }),
        bool_exp("linearly presented (restricted connectivity)", false, kFigure, lp_restricted),
        bool_exp("linearly presented (rank and minors)", false, kFigure, lp_syzygy),
        str_exp("certificate pair", family_string(Labels{path.front(), path.back()}), kFigure,
                [](const SimpleGraph& g) {
                  const CoverGraph cg = build_cover_graph(g);
                  const auto cert = is_linearly_presented(cg).certificate.value();
                  return family_string(std::vector<VertexSet>{cg.family[cert.first], cg.family[cert.second]});
                }),
        bool_exp("C2..C5 lies in its restriction", true, kFigure,
                 [path](const SimpleGraph& g) {
                   const CoverGraph cg = build_cover_graph(g);
                   std::vector<int> p;
                   for (int k = 1; k <= 4; ++k) p.push_back(cg.family.index_of(set_of(path[k])));
                   return path_diagnostics(cg, p).inside_restriction;
                 }),
        bool_exp("exchange edges of C2..C5 form a matching", false, kFigure,
                 [path](const SimpleGraph& g) {
                   const CoverGraph cg = build_cover_graph(g);
                   std::vector<int> p;
                   for (int k = 1; k <= 4; ++k) p.push_back(cg.family.index_of(set_of(path[k])));
                   return path_diagnostics(cg, p).witnesses_form_matching;
                 }),
        bool_exp("t4-t5 is an exchange edge", true, kFigure,
                 [](const SimpleGraph& g) {
                   const auto ex = exchange_edges(g);
                   return std::find(ex.begin(), ex.end(), Edge(3, 4)) != ex.end();
                 }),
        bool_exp("endpoint conditions of the path", false, kBrute,
                 [](const SimpleGraph& g) { return tree_linear_presentation_check(g).path_criterion; }),
        str_exp("families", "U,U1,U2,U3", kExample, membership_string),
    };
    out.push_back(std::move(c));
  }
  {
    const Labels path = {{1, 3, 7}, {1, 2, 7}, {1, 2, 6}, {2, 3, 6}};
    const SimpleGraph h = induced_subgraph(figure2(), set_of({1, 2, 3, 6, 7})).graph;
    // Induced relabeling maps t1,t2,t3,t6,t7 to t1..t5.
    const Labels local = {{1, 3, 5}, {1, 2, 5}, {1, 2, 4}, {2, 3, 4}};
    ExampleCase c{"figure-2-induced", "subgraph of figure 2 induced by t1,t2,t3,t6,t7 (relabeled t1..t5)", h, {}};
    c.expectations = {
        covers_exp(local, kExample),
        bool_exp("listed order is a path", true, kExample,
                 [local](const SimpleGraph& g) { return is_cover_path(build_cover_graph(g), local); }),
        bool_exp("linearly presented (restricted connectivity)", true, kExample, lp_restricted),
        bool_exp("linearly presented (rank and minors)", true, kExample, lp_syzygy),
        bool_exp("endpoint conditions of the path", true, kBrute,
                 [](const SimpleGraph& g) { return tree_linear_presentation_check(g).path_criterion; }),
        str_exp("symmetric difference of C1 and C4", "C4 unmixed Konig not-CM", kExample,
                [local](const SimpleGraph& g) {
                  const CoverFamily f = minimal_vertex_covers(g);
                  const SymDiffReport r =
                      sym_diff_analysis(g, f, f.index_of(set_of(local.front())), f.index_of(set_of(local.back())));
                  const bool cycle = r.sub.graph.order() == 4 && r.sub.graph.edge_count() == 4 &&
                                     four_cycles(r.sub.graph).size() == 1;
                  return std::string(cycle ? "C4" : "other") + (r.unmixed ? " unmixed" : " mixed") +
                         (is_konig(r.sub.graph) ? " Konig" : " non-Konig") +
                         (r.cm == true ? " CM" : " not-CM");
                }),
    };
    (void)path;
    out.push_back(std::move(c));
  }
  for (int r = 2; r <= 6; ++r) {
    ExampleCase c{"H" + std::to_string(r), std::to_string(r) + " disjoint edges", matching_graph(r), {}};
    c.expectations = {
        int_exp("cover graph vertices", 1 << r, kFormula,
                [](const SimpleGraph& g) { return build_cover_graph(g).order(); }),
        int_exp("cover graph edges", r << (r - 1), kFormula,
                [](const SimpleGraph& g) { return static_cast<int>(build_cover_graph(g).edges.size()); }),
        bool_exp("cover graph bipartite", true, kFormula,
                 [](const SimpleGraph& g) { return build_cover_graph(g).bipartition().has_value(); }),
        bool_exp("cover graph regular of degree r", true, kFormula,
                 [r](const SimpleGraph& g) { return build_cover_graph(g).is_regular(r); }),
        str_exp("perfect matching equals exchange edges", "true", kFormula,
                [](const SimpleGraph& g) {
                  const CmStructure s = cm_konig_structure(g);
                  return yn(s.perfect_matching == s.exchange_edges);
                }),
    };
    out.push_back(std::move(c));
  }
  for (int k = 1; k <= 4; ++k) {
    SimpleGraph g1(0);
    for (int i = 0; i <= k; ++i) g1 = disjoint_union(g1, complete_graph(2));
    ExampleCase c{"matching-join-" + std::to_string(k),
                  std::to_string(k + 1) + " disjoint edges joined to one vertex", join(g1, discrete_graph(1)), {}};
    c.expectations = {int_exp("v", k + 1, kFormula, v_of)};
    out.push_back(std::move(c));
  }
  for (int s = 3; s <= 12; ++s) {
    ExampleCase c{"cycle-" + std::to_string(s), std::to_string(s) + "-cycle", cycle_graph(s), {}};
    c.expectations = {int_exp("v", s / 2, kExternal, v_of)};
    out.push_back(std::move(c));
  }
  struct Partite {
    std::vector<int> sizes;
  };
  for (const Partite& p : {Partite{{2, 2}}, Partite{{3, 3}}, Partite{{1, 1, 1}}, Partite{{2, 2, 2}},
                           Partite{{1, 1, 1, 1}}, Partite{{2, 2, 2, 2}}, Partite{{1, 2}}, Partite{{1, 2, 2}}}) {
    std::string name = "multipartite";
    for (int s : p.sizes) name += "-" + std::to_string(s);
    const SimpleGraph g = complete_multipartite(p.sizes);
    const int k = static_cast<int>(p.sizes.size());
    const bool homogeneous = std::all_of(p.sizes.begin(), p.sizes.end(), [&](int s) { return s == p.sizes[0]; });
    const bool complete = std::all_of(p.sizes.begin(), p.sizes.end(), [](int s) { return s == 1; });
    ExampleCase c{name, "complete multipartite graph", g, {}};
    c.expectations = {
        bool_exp("unmixed", homogeneous, kFormula, [](const SimpleGraph& h) { return minimal_vertex_covers(h).unmixed; }),
        int_exp("edges with (P)", k == 2 ? g.edge_count() : 0, kFormula,
                [](const SimpleGraph& h) {
                  int count = 0;
                  for (const Edge& e : h.edges()) count += edge_has_P_property(h, e) ? 1 : 0;
                  return count;
                }),
        int_exp("v", g.order() - 2, kFormula, v_of),
    };
    if (homogeneous) {
      c.expectations.push_back(bool_exp("cover graph complete", complete, kFormula, [](const SimpleGraph& h) {
        const CoverGraph cg = build_cover_graph(h);
        return static_cast<int>(cg.edges.size()) == cg.order() * (cg.order() - 1) / 2;
      }));
      c.expectations.push_back(bool_exp("v = alpha0 - 1", complete, kFormula,
                                        [](const SimpleGraph& h) { return v_of(h) == alpha0_of(h) - 1; }));
      if (k >= 2 && !complete)
        c.expectations.push_back(
            str_exp("families", k >= 3 ? "U,U1" : "U", kFormula, membership_string));
    }
    out.push_back(std::move(c));
  }
  {
    ExampleCase c{"k2", "single edge", graph_of(2, {{1, 2}}), {}};
    c.expectations = {
        covers_exp({{1}, {2}}, kBrute),
        int_exp("alpha_e", 1, kBrute, exchange_number),
        int_exp("v of the edge ideal", 1, kBrute, v_edge_ideal),
        bool_exp("Cohen-Macaulay", true, kBrute, cm_konig),
    };
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

const std::vector<ExampleCase>& builtin_examples() {
  static const std::vector<ExampleCase> all = make_examples();
  return all;
}

std::vector<ExampleResult> evaluate_example(const ExampleCase& c) {
  std::vector<ExampleResult> out;
  for (const Expectation& e : c.expectations) {
    ExampleResult r{c.name, e.what, e.expected, "", e.source, false};
    try {
      r.actual = e.actual(c.graph);
    } catch (const std::exception& ex) {
      r.actual = std::string("error: ") + ex.what();
    }
    r.ok = r.actual == r.expected;
    out.push_back(std::move(r));
  }
  return out;
}

VerificationReport run_examples(std::vector<ExampleResult>* details) {
  VerificationReport report;
  report.suite = "examples";
  report.statement = "builtin example corpus reproduces its expected values";
  report.nmin = 0;
  report.nmax = 0;
  for (const ExampleCase& c : builtin_examples()) {
    ++report.scanned;
    ++report.instances;
    for (ExampleResult& r : evaluate_example(c)) {
      if (!r.ok)
        report.failures.push_back({c.graph, c.name + ": " + r.what + " expected " + r.expected + ", got " + r.actual});
      if (details) details->push_back(std::move(r));
    }
  }
  return report;
}

}  // namespace coverlab
