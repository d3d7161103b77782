#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "coverlab/classify.hpp"
#include "coverlab/cover_graph.hpp"
#include "coverlab/covers.hpp"
#include "coverlab/graph.hpp"
#include "coverlab/syzygy.hpp"
#include "coverlab/verify.hpp"
#include "coverlab/vnumber.hpp"

namespace coverlab {

using json = nlohmann::ordered_json;

// All parsers take 1-indexed labels and throw ParseError on bad syntax, loops
// and labels outside 1..n.

// "n m" then m lines "u v". Blank lines and '#' comments are ignored.
SimpleGraph parse_edge_list(const std::string& text);
// {"n": int, "edges": [[u, v], ...]}
SimpleGraph parse_graph_json(const std::string& text);
// "1-2,2-3". Without n the order is the largest label.
SimpleGraph parse_inline_edges(const std::string& text, std::optional<int> n = std::nullopt);
// JSON when the first non-blank character is '{', edge list otherwise.
SimpleGraph parse_graph(const std::string& text);
SimpleGraph read_graph_file(const std::string& path);

std::string to_edge_list(const SimpleGraph& g);
json graph_json(const SimpleGraph& g);

json labels_json(VertexSet s);
json edge_json(const Edge& e);
json covers_json(const CoverFamily& family);
json vnumber_json(const VNumberResult& r);
json cover_graph_json(const CoverGraph& cg);
// Node label "t1,t3,t4"; edge label "t1<->t2".
std::string cover_graph_dot(const CoverGraph& cg);

struct LpComparison {
  LinearPresentation restricted;
  SyzygyDecision syzygy;
  bool agree = false;
};

// Both criteria; throws InvariantViolation if they disagree.
LpComparison check_lp(const SimpleGraph& g, const MinorOptions& options = {});
json lp_json(const CoverGraph& cg, const LpComparison& lp);

struct SyzygyReport {
  LinearSyzygyMatrix matrix;
  int rank = 0;
  int components = 0;
  std::optional<MonomialIdealLite> minors;  // ideal of (r-1)-minors
  std::optional<int> height;
  std::optional<std::string> minors_error;
};

SyzygyReport syzygy_report(const SimpleGraph& g, const MinorOptions& options = {});
json syzygy_json(const SyzygyReport& r);
std::string syzygy_text(const SyzygyReport& r);

json classify_json(const SimpleGraph& g);

json report_json(const VerificationReport& r);
std::string report_text(const VerificationReport& r);
json example_results_json(const std::vector<ExampleResult>& results);

}  // namespace coverlab
