#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "coverlab/covers.hpp"
#include "coverlab/graph.hpp"

namespace coverlab {

// Edge {C_i, C_j} of the cover graph, i < j, with C_j = (C_i - out) + in.
struct CoverGraphEdge {
  int i = -1;
  int j = -1;
  int out_vertex = -1;
  int in_vertex = -1;

  Edge witness() const { return Edge(out_vertex, in_vertex); }
  auto operator<=>(const CoverGraphEdge&) const = default;
};

// Graph on the minimal covers of an unmixed graph: C_i ~ C_j iff they differ
// by a single exchange.
struct CoverGraph {
  CoverFamily family;
  std::vector<CoverGraphEdge> edges;     // lexicographic in (i, j)
  std::vector<std::vector<int>> adj;     // ascending

  int order() const { return family.size(); }
  bool adjacent(int i, int j) const;
  const CoverGraphEdge& edge_between(int i, int j) const;
  // Component label per cover, labels in order of first appearance.
  std::vector<int> component_labels() const;
  int component_count() const;
  bool connected() const { return component_count() <= 1; }
  std::optional<std::vector<int>> bipartition() const;
  bool is_regular(int degree) const;
};

// Throws PreconditionError naming two covers of different sizes for mixed graphs.
CoverGraph build_cover_graph(const SimpleGraph& g);
CoverGraph build_cover_graph(const SimpleGraph& g, const CoverFamily& family);

struct RestrictedSubgraph {
  int i = -1;
  int j = -1;
  std::vector<int> members;                   // covers inside C_i | C_j, ascending
  std::vector<std::pair<int, int>> edges;     // cover-index pairs
  bool connects_pair = false;                 // some path from C_i to C_j
  bool connected = false;                     // the whole subgraph is connected
};

RestrictedSubgraph restricted_subgraph(const CoverGraph& cg, int i, int j);

struct LinearPresentation {
  bool linearly_presented = false;
  std::optional<std::pair<int, int>> certificate;   // first failing pair
  std::vector<std::pair<int, int>> failing_pairs;
};

// Restricted-connectivity criterion. Requires an unmixed graph with edges.
LinearPresentation is_linearly_presented(const CoverGraph& cg);
LinearPresentation is_linearly_presented(const SimpleGraph& g);

// Triangle {apex, y, z} with C_y - C_apex = C_z - C_apex = {shared_vertex}.
struct StrongTriangle {
  int apex = -1;
  int y = -1;
  int z = -1;
  int shared_vertex = -1;
};

// Every strong triangle once (apex chosen as the first labeling that works).
// Asserts the column relation f^{y,z} = f^{apex,z} - f^{apex,y}.
std::vector<StrongTriangle> strong_triangles(const CoverGraph& cg);

struct SegmentDiagnostics {
  int first = -1, middle = -1, last = -1;
  Edge eps1, eps2;
  bool in1_differs_from_out2 = false;   // t_l1 != t_k2
  bool middle_inside_union = false;     // C_2 in C_1 | C_3
  bool induced = false;
  // Only meaningful when induced.
  bool witnesses_disjoint = false;
  bool triple_intersection_ok = false;  // |C1 & C2 & C3| = alpha0 - 2
  bool outer_intersection_ok = false;   // |C1 & C3| = alpha0 - 2
  bool in2_outside_first = false;       // t_l2 not in C_1
};

struct PathDiagnostics {
  std::vector<int> path;
  std::vector<Edge> witnesses;
  std::vector<SegmentDiagnostics> segments;
  bool inside_restriction = false;      // every C_k in C_1 | C_n
  bool identity_holds = false;          // the cardinality form of the same fact
  bool nested_unions = false;           // C_i in C_p | C_q for p <= i <= q
  bool nested_intersections = false;    // |C_p & ... & C_q| = alpha0 - (q - p)
  bool witnesses_form_matching = false;
};

// Throws PreconditionError if consecutive covers are not adjacent or repeat.
PathDiagnostics path_diagnostics(const CoverGraph& cg, const std::vector<int>& path);

struct TreeCheck {
  bool tree_criterion = false;          // every path satisfies the intersection count
  bool restricted_criterion = false;    // restricted connectivity, for comparison
  bool is_path = false;
  std::vector<int> path_order;          // when is_path
  bool path_a = false, path_b = false, path_c = false;
  bool path_criterion = false;          // a && b && c
};

// Requires the cover graph to be a tree; throws PreconditionError otherwise.
TreeCheck tree_linear_presentation_check(const SimpleGraph& g);

}  // namespace coverlab
