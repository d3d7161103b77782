#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "coverlab/errors.hpp"
#include "coverlab/io.hpp"

using namespace coverlab;

namespace {

enum Exit { kOk = 0, kFailed = 1, kParse = 2, kPrecondition = 3, kResource = 4 };

struct GraphArgs {
  std::string input;
  std::string edges;
  int n = -1;
  std::string format = "json";
  std::uint64_t budget = MinorOptions{}.budget;
};

void add_graph_options(CLI::App* cmd, GraphArgs& a, const std::vector<std::string>& formats) {
  auto* input = cmd->add_option("--input", a.input, "graph file: 'n m' edge list or JSON {\"n\",\"edges\"}");
  auto* edges = cmd->add_option("--edges", a.edges, "inline edge list, 1-indexed, e.g. 1-2,2-3");
  input->excludes(edges);
  cmd->add_option("--n", a.n, "vertex count for --edges (default: largest label)");
  cmd->add_option("--format", a.format, "output format")->check(CLI::IsMember(formats));
}

SimpleGraph load(const GraphArgs& a) {
  if (!a.input.empty()) return read_graph_file(a.input);
  if (!a.edges.empty() || a.n >= 0)
    return parse_inline_edges(a.edges, a.n >= 0 ? std::optional<int>(a.n) : std::nullopt);
  throw ParseError("no graph given: use --input FILE or --edges u-v,...");
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string covers_text(const CoverFamily& f) {
  std::string s = "alpha0 " + std::to_string(f.alpha0) + ", bight " + std::to_string(f.bight) +
                  (f.unmixed ? ", unmixed\n" : ", mixed\n");
  for (int i = 0; i < f.size(); ++i) s += "C" + std::to_string(i + 1) + " = " + f[i].to_string() + "\n";
  return s;
}

int cmd_covers(const GraphArgs& a) {
  const CoverFamily f = minimal_vertex_covers(load(a));
  if (a.format == "json")
    print(covers_json(f));
  else
    std::cout << covers_text(f);
  return kOk;
}

int cmd_vnumber(const GraphArgs& a) {
  const VNumberResult r = vnumber_analysis(load(a));
  if (a.format == "json") {
    print(vnumber_json(r));
    return kOk;
  }
  std::cout << "alpha_e " << r.alpha_e << "\nv(I_c) " << r.v_cover << "\nv(I) "
            << (r.v_edge ? std::to_string(*r.v_edge) : "undefined") << "\n";
  for (const auto& [e, v] : r.per_prime) std::cout << "v at (" << e.to_string() << ") " << v << "\n";
  std::cout << "exchange edges:";
  for (const Edge& e : r.exchange_edges) std::cout << " " << e.to_string();
  std::cout << "\n";
  return kOk;
}

int cmd_cover_graph(const GraphArgs& a) {
  const CoverGraph cg = build_cover_graph(load(a));
  if (a.format == "json") {
    print(cover_graph_json(cg));
  } else if (a.format == "dot") {
    std::cout << cover_graph_dot(cg);
  } else {
    std::cout << covers_text(cg.family);
    for (const CoverGraphEdge& e : cg.edges)
      std::cout << "C" << e.i + 1 << " -- C" << e.j + 1 << "  via " << e.witness().to_string() << "\n";
    std::cout << cg.component_count() << " component(s)\n";
  }
  return kOk;
}

int cmd_check_lp(const GraphArgs& a) {
  const SimpleGraph g = load(a);
  MinorOptions options;
  options.budget = a.budget;
  const LpComparison lp = check_lp(g, options);
  const CoverGraph cg = build_cover_graph(g);
  if (a.format == "json") {
    print(lp_json(cg, lp));
    return kOk;
  }
  std::cout << "linearly presented: " << (lp.restricted.linearly_presented ? "yes" : "no") << "\n";
  if (lp.restricted.certificate) {
    const auto [i, j] = *lp.restricted.certificate;
    std::cout << "certificate: C" << i + 1 << " = " << cg.family[i].to_string() << ", C" << j + 1 << " = "
              << cg.family[j].to_string() << " are not joined inside C" << i + 1 << " | C" << j + 1 << "\n";
  }
  std::cout << "syzygy criterion: rank " << lp.syzygy.rank << " of " << lp.syzygy.rows << " rows, minor height "
            << (lp.syzygy.height ? std::to_string(*lp.syzygy.height)
                                 : (lp.syzygy.height_at_least_two ? ">= 2" : "< 2 or not computed"))
            << "\n";
  return kOk;
}

int cmd_syzygy(const GraphArgs& a) {
  MinorOptions options;
  options.budget = a.budget;
  const SyzygyReport r = syzygy_report(load(a), options);
  if (a.format == "json")
    print(syzygy_json(r));
  else
    std::cout << syzygy_text(r);
  return kOk;
}

int cmd_classify(const GraphArgs& a) {
  const json j = classify_json(load(a));
  if (a.format == "json") {
    print(j);
    return kOk;
  }
  for (const auto& [section, body] : j.items()) {
    if (!body.is_object()) {
      std::cout << section << ": " << body.dump() << "\n";
      continue;
    }
    std::cout << section << ":\n";
    for (const auto& [key, value] : body.items()) std::cout << "  " << key << ": " << value.dump() << "\n";
  }
  return kOk;
}

struct VerifyArgs {
  std::string suite = "all";
  int nmax = 0;
  bool dedup = false;
  std::uint64_t budget = MinorOptions{}.budget;
  std::string format = "text";
};

int cmd_verify(const VerifyArgs& a) {
  std::vector<std::string> names;
  if (a.suite == "all") {
    for (const SuiteInfo& s : suite_catalog()) names.push_back(s.name);
  } else if (is_known_suite(a.suite)) {
    names.push_back(a.suite);
  } else {
    std::cerr << "unknown suite '" << a.suite << "'; known:";
    for (const SuiteInfo& s : suite_catalog()) std::cerr << " " << s.name;
    std::cerr << "\n";
    return kParse;
  }
  SuiteOptions options;
  options.nmax = a.nmax;
  options.dedup = a.dedup;
  options.minor_budget = a.budget;
  bool passed = true;
  json all = json::array();
  for (const std::string& name : names) {
    const VerificationReport r = run_suite(name, options);
    passed = passed && r.passed();
    if (a.format == "json")
      all.push_back(report_json(r));
    else
      std::cout << report_text(r) << std::flush;
  }
  if (a.format == "json") print(names.size() == 1 ? all[0] : all);
  return passed ? kOk : kFailed;
}

int cmd_examples(const std::string& format) {
  std::vector<ExampleResult> details;
  const VerificationReport r = run_examples(&details);
  if (format == "json") {
    print(json{{"report", report_json(r)}, {"results", example_results_json(details)}});
  } else {
    for (const ExampleResult& d : details)
      std::cout << (d.ok ? "ok   " : "FAIL ") << d.example << ": " << d.what << " = " << d.actual
                << (d.ok ? "" : " (expected " + d.expected + ")") << "  [" << d.source << "]\n";
    std::cout << report_text(r);
  }
  return r.passed() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coverlab: minimal vertex covers, v-numbers and linear presentation of cover ideals"};
  app.require_subcommand(1);

  GraphArgs g;
  const std::vector<std::string> json_text = {"json", "text"};
  auto* covers = app.add_subcommand("covers", "minimal vertex covers");
  add_graph_options(covers, g, json_text);
  auto* vnumber = app.add_subcommand("vnumber", "exchange number and v-numbers");
  add_graph_options(vnumber, g, json_text);
  auto* cover_graph = app.add_subcommand("cover-graph", "graph of the minimal covers");
  add_graph_options(cover_graph, g, {"json", "text", "dot"});
  auto* check_lp_cmd = app.add_subcommand("check-lp", "linear presentation by both criteria");
  add_graph_options(check_lp_cmd, g, json_text);
  check_lp_cmd->add_option("--budget", g.budget, "minor expansion budget");
  auto* syzygy = app.add_subcommand("syzygy", "linear syzygy matrix, rank, minors and height");
  add_graph_options(syzygy, g, json_text);
  syzygy->add_option("--budget", g.budget, "minor expansion budget");
  auto* classify = app.add_subcommand("classify", "Konig, Cohen-Macaulay and family membership");
  add_graph_options(classify, g, json_text);

  VerifyArgs v;
  auto* verify = app.add_subcommand("verify", "exhaustive verification suites");
  verify->add_option("--suite", v.suite, "suite name or 'all'");
  verify->add_option("--nmax", v.nmax, "largest order (default: per suite)")->check(CLI::Range(1, 10));
  verify->add_flag("--dedup", v.dedup, "one graph per isomorphism class");
  verify->add_option("--budget", v.budget, "minor expansion budget per instance");
  verify->add_option("--format", v.format, "output format")->check(CLI::IsMember(json_text));

  std::string examples_format = "text";
  auto* examples = app.add_subcommand("examples", "builtin example corpus");
  examples->add_option("--format", examples_format, "output format")->check(CLI::IsMember(json_text));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*covers) return cmd_covers(g);
    if (*vnumber) return cmd_vnumber(g);
    if (*cover_graph) return cmd_cover_graph(g);
    if (*check_lp_cmd) return cmd_check_lp(g);
    if (*syzygy) return cmd_syzygy(g);
    if (*classify) return cmd_classify(g);
    if (*verify) return cmd_verify(v);
    if (*examples) return cmd_examples(examples_format);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InvalidGraph& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kFailed;
  }
  return kOk;
}
