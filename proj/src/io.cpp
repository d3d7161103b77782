#include "coverlab/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "coverlab/errors.hpp"

namespace coverlab {

namespace {

SimpleGraph build(int n, const std::vector<std::pair<long long, long long>>& labels) {
  if (n < 0) throw ParseError("negative vertex count");
  if (n > VertexSet::kCapacity) throw ParseError("at most " + std::to_string(VertexSet::kCapacity) + " vertices");
  std::vector<Edge> edges;
  for (auto [u, v] : labels) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError("label out of range 1.." + std::to_string(n) + ": " + std::to_string(u) + "-" +
                       std::to_string(v));
    if (u == v) throw ParseError("loop at vertex " + std::to_string(u));
    edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
  }
  try {
    return SimpleGraph::from_edges(n, edges);
  } catch (const InvalidGraph& e) {
    throw ParseError(e.what());
  }
}

long long parse_label(const std::string& token) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError("not a vertex label: '" + token + "'");
  if (token.size() > 6) throw ParseError("label too large: " + token);
  return std::stoll(token);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

}  // namespace

SimpleGraph parse_edge_list(const std::string& text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    lines.push_back(std::move(tokens));
  }
  if (lines.empty()) throw ParseError("empty edge list");
  if (lines[0].size() != 2) throw ParseError("header must be 'n m'");
  const long long n = parse_label(lines[0][0]), m = parse_label(lines[0][1]);
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw ParseError("header announces " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
  std::vector<std::pair<long long, long long>> edges;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    if (lines[k].size() != 2) throw ParseError("edge line " + std::to_string(k) + " must be 'u v'");
    edges.emplace_back(parse_label(lines[k][0]), parse_label(lines[k][1]));
  }
  return build(static_cast<int>(n), edges);
}

SimpleGraph parse_graph_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError("JSON graph needs an integer field \"n\"");
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw ParseError("JSON graph needs an array \"edges\"");
  std::vector<std::pair<long long, long long>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("every edge must be a pair of integers");
    edges.emplace_back(e[0].get<long long>(), e[1].get<long long>());
  }
  const long long n = doc["n"].get<long long>();
  if (n > VertexSet::kCapacity) throw ParseError("at most " + std::to_string(VertexSet::kCapacity) + " vertices");
  return build(static_cast<int>(n), edges);
}

SimpleGraph parse_inline_edges(const std::string& text, std::optional<int> n) {
  std::vector<std::pair<long long, long long>> edges;
  long long top = 0;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    item = trim(item);
    if (item.empty()) continue;
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw ParseError("edge must look like 'u-v': '" + item + "'");
    const long long u = parse_label(trim(item.substr(0, dash))), v = parse_label(trim(item.substr(dash + 1)));
    top = std::max({top, u, v});
    edges.emplace_back(u, v);
  }
  if (top > VertexSet::kCapacity) throw ParseError("label too large: " + std::to_string(top));
  return build(n.value_or(static_cast<int>(top)), edges);
}

SimpleGraph parse_graph(const std::string& text) {
  const std::string t = trim(text);
  if (!t.empty() && t.front() == '{') return parse_graph_json(t);
  return parse_edge_list(t);
}

SimpleGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string to_edge_list(const SimpleGraph& g) {
  std::string s = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) s += std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
  return s;
}

json graph_json(const SimpleGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back(edge_json(e));
  return json{{"n", g.order()}, {"edges", edges}};
}

json labels_json(VertexSet s) {
  json out = json::array();
  for (int v : s) out.push_back(v + 1);
  return out;
}

json edge_json(const Edge& e) { return json::array({e.u + 1, e.v + 1}); }

json covers_json(const CoverFamily& family) {
  json covers = json::array();
  for (VertexSet c : family.covers) covers.push_back(labels_json(c));
  return json{{"alpha0", family.alpha0}, {"bight", family.bight}, {"unmixed", family.unmixed}, {"covers", covers}};
}

json vnumber_json(const VNumberResult& r) {
  json per_prime = json::object();
  for (const auto& [e, v] : r.per_prime) per_prime[std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1)] = v;
  json ex = json::array();
  for (const Edge& e : r.exchange_edges) ex.push_back(edge_json(e));
  return json{{"alpha_e", r.alpha_e},
              {"v_cover", r.v_cover},
              {"v_edge", r.v_edge ? json(*r.v_edge) : json(nullptr)},
              {"v_p", per_prime},
              {"exchange_edges", ex}};
}

json cover_graph_json(const CoverGraph& cg) {
  json nodes = json::array();
  for (int i = 0; i < cg.order(); ++i) nodes.push_back(json{{"index", i + 1}, {"cover", labels_json(cg.family[i])}});
  json edges = json::array();
  for (const CoverGraphEdge& e : cg.edges)
    edges.push_back(json{{"i", e.i + 1}, {"j", e.j + 1}, {"out", e.out_vertex + 1}, {"in", e.in_vertex + 1}});
  return json{{"covers", nodes},
              {"edges", edges},
              {"components", cg.component_count()},
              {"connected", cg.connected()},
              {"bipartite", cg.bipartition().has_value()}};
}

std::string cover_graph_dot(const CoverGraph& cg) {
  std::string s = "graph G {\n";
  for (int i = 0; i < cg.order(); ++i) {
    std::string label;
    for (int v : cg.family[i]) label += (label.empty() ? "t" : ",t") + std::to_string(v + 1);
    s += "  C" + std::to_string(i + 1) + " [label=\"" + label + "\"];\n";
  }
  for (const CoverGraphEdge& e : cg.edges)
    s += "  C" + std::to_string(e.i + 1) + " -- C" + std::to_string(e.j + 1) + " [label=\"t" +
         std::to_string(e.out_vertex + 1) + "<->t" + std::to_string(e.in_vertex + 1) + "\"];\n";
  return s + "}\n";
}

LpComparison check_lp(const SimpleGraph& g, const MinorOptions& options) {
  const CoverGraph cg = build_cover_graph(g);
  LpComparison out{is_linearly_presented(cg), is_linearly_presented_via_syzygy(cg, options), false};
  out.agree = out.restricted.linearly_presented == out.syzygy.linearly_presented;
  check_invariant(out.agree, "restricted connectivity and the syzygy criterion disagree on " + g.to_string());
  return out;
}

json lp_json(const CoverGraph& cg, const LpComparison& lp) {
  json cert = nullptr;
  if (lp.restricted.certificate) {
    const auto [i, j] = *lp.restricted.certificate;
    const RestrictedSubgraph r = restricted_subgraph(cg, i, j);
    json members = json::array();
    for (int k : r.members) members.push_back(k + 1);
    cert = json{{"i", i + 1},
                {"j", j + 1},
                {"cover_i", labels_json(cg.family[i])},
                {"cover_j", labels_json(cg.family[j])},
                {"restricted_covers", members},
                {"restricted_edges", r.edges.size()}};
  }
  return json{{"linearly_presented", lp.restricted.linearly_presented},
              {"restricted_connectivity", json{{"linearly_presented", lp.restricted.linearly_presented},
                                               {"failing_pairs", lp.restricted.failing_pairs.size()},
                                               {"certificate", cert}}},
              {"syzygy", json{{"linearly_presented", lp.syzygy.linearly_presented},
                              {"rows", lp.syzygy.rows},
                              {"cols", lp.syzygy.cols},
                              {"rank", lp.syzygy.rank},
                              {"rank_ok", lp.syzygy.rank_ok},
                              {"height_at_least_two", lp.syzygy.height_at_least_two},
                              {"height", lp.syzygy.height ? json(*lp.syzygy.height) : json(nullptr)},
                              {"minors_seen", lp.syzygy.minors_seen}}},
              {"agree", lp.agree}};
}

SyzygyReport syzygy_report(const SimpleGraph& g, const MinorOptions& options) {
  const CoverGraph cg = build_cover_graph(g);
  SyzygyReport r{build_ls_matrix(cg), 0, cg.component_count(), std::nullopt, std::nullopt, std::nullopt};
  r.rank = numerical_rank(r.matrix);
  if (r.matrix.rows < 2) return r;
  try {
    r.minors = minors_ideal(r.matrix, r.matrix.rows - 1, options);
    if (!r.minors->empty()) r.height = monomial_ideal_height(*r.minors);
  } catch (const ResourceError& e) {
    r.minors_error = e.what();
  } catch (const UndefinedError& e) {
    r.minors_error = e.what();
  }
  return r;
}

json syzygy_json(const SyzygyReport& r) {
  json columns = json::array();
  for (const LsColumn& c : r.matrix.columns)
    columns.push_back(json{{"i", c.i + 1}, {"j", c.j + 1}, {"plus", c.in_vertex + 1}, {"minus", c.out_vertex + 1}});
  json out{{"rows", r.matrix.rows},
           {"cols", r.matrix.cols()},
           {"columns", columns},
           {"rank", r.rank},
           {"components", r.components}};
  if (r.minors) {
    json gens = json::array();
    for (const Monomial& m : r.minors->generators) gens.push_back(m.to_string());
    out["minor_size"] = r.matrix.rows - 1;
    out["minor_generators"] = gens;
  } else {
    out["minor_generators"] = nullptr;
  }
  out["height"] = r.height ? json(*r.height) : json(nullptr);
  if (r.minors_error) out["minors_error"] = *r.minors_error;
  return out;
}

std::string syzygy_text(const SyzygyReport& r) {
  std::string s = r.matrix.dump();
  s += "rank " + std::to_string(r.rank) + " (rows " + std::to_string(r.matrix.rows) + ", components " +
       std::to_string(r.components) + ")\n";
  if (r.minors) {
    s += "ideal of " + std::to_string(r.matrix.rows - 1) + "-minors:";
    for (const Monomial& m : r.minors->generators) s += " " + m.to_string();
    s += r.minors->empty() ? " (zero)\n" : "\n";
  }
  if (r.height) s += "height " + std::to_string(*r.height) + "\n";
  if (r.minors_error) s += "minors: " + *r.minors_error + "\n";
  return s;
}

json classify_json(const SimpleGraph& g) {
  const CoverFamily family = minimal_vertex_covers(g);
  const KonigReport k = konig_pm_analysis(g);
  auto opt = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
  json pm = nullptr;
  if (k.unique_pm) {
    pm = json::array();
    for (const Edge& e : *k.unique_pm) pm.push_back(edge_json(e));
  }
  json konig{{"matching_number", k.matching_number},
             {"alpha0", k.alpha0},
             {"konig", k.is_konig},
             {"unmixed", k.unmixed},
             {"no_isolated", k.no_isolated},
             {"perfect_matchings", k.perfect_matching_count},
             {"unique_perfect_matching", pm},
             {"very_well_covered", k.very_well_covered},
             {"cohen_macaulay", opt(k.cm)},
             {"linearly_presented", opt(k.linearly_presented)},
             {"cover_graph_connected", opt(k.gj_connected)},
             {"no_duplicated_vertices", k.no_duplicates},
             {"induced_4cycles_have_non_p_edge", k.induced_4cycles_ok}};
  const FamilyMembership m = family_membership(g);
  json families{{"U", m.u}, {"U1", m.u1}, {"U2", m.u2}, {"U3", m.u3}, {"U4", m.u4}, {"U5", m.u5}};
  json flags = json::object();
  for (const auto& [e, p] : p_property_flags(g, family)) flags[std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1)] = p;
  return json{{"konig", konig}, {"families", families}, {"p_property", flags}, {"free_vertex", has_free_vertex(g)}};
}

json report_json(const VerificationReport& r) {
  json by_order = json::object();
  for (const auto& [n, count] : r.instances_by_order) by_order[std::to_string(n)] = count;
  auto certs = [](const std::vector<Certificate>& list) {
    json out = json::array();
    for (const Certificate& c : list)
      out.push_back(json{{"graph", graph_json(c.graph)}, {"edge_list", to_edge_list(c.graph)}, {"diagnosis", c.diagnosis}});
    return out;
  };
  return json{{"suite", r.suite},
              {"statement", r.statement},
              {"nmin", r.nmin},
              {"nmax", r.nmax},
              {"dedup", r.dedup},
              {"scanned", r.scanned},
              {"instances", r.instances},
              {"skipped", r.skipped},
              {"instances_by_order", by_order},
              {"failures", certs(r.failures)},
              {"skips", certs(r.skips)},
              {"passed", r.passed()}};
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream s;
  s << (r.passed() ? "PASS " : "FAIL ") << r.suite << ": " << r.statement << "\n";
  if (r.nmax > 0) s << "  orders " << r.nmin << ".." << r.nmax << (r.dedup ? " (up to isomorphism)" : " (labeled)") << "\n";
  s << "  scanned " << r.scanned << ", instances " << r.instances << ", skipped " << r.skipped << ", failures "
    << r.failures.size() << "\n";
  if (!r.instances_by_order.empty()) {
    s << "  by order:";
    for (const auto& [n, count] : r.instances_by_order) s << " " << n << ":" << count;
    s << "\n";
  }
  for (const Certificate& c : r.failures) s << "  counterexample: " << c.diagnosis << "\n" << to_edge_list(c.graph);
  for (const Certificate& c : r.skips) s << "  skipped: " << c.diagnosis << "\n" << to_edge_list(c.graph);
  return s.str();
}

json example_results_json(const std::vector<ExampleResult>& results) {
  json out = json::array();
  for (const ExampleResult& r : results)
    out.push_back(json{{"example", r.example},
                       {"what", r.what},
                       {"expected", r.expected},
                       {"actual", r.actual},
                       {"source", r.source},
                       {"ok", r.ok}});
  return out;
}

}  // namespace coverlab
