#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coverlab/cover_graph.hpp"
#include "coverlab/graph.hpp"

namespace coverlab {

// 0, +t_var or -t_var.
struct SignedVariable {
  int sign = 0;
  int var = -1;

  bool zero() const { return sign == 0; }
};

// Column for the cover-graph edge (i, j), i < j, C_j = (C_i - out) + in:
// +t_in at row i and -t_out at row j.
struct LsColumn {
  int i = -1;
  int j = -1;
  int out_vertex = -1;
  int in_vertex = -1;
};

struct LinearSyzygyMatrix {
  int rows = 0;
  int vars = 0;
  std::vector<LsColumn> columns;
  std::vector<VertexSet> covers;

  int cols() const { return static_cast<int>(columns.size()); }
  SignedVariable entry(int row, int col) const;
  // The {0, +1, -1} shadow, row-major.
  std::vector<std::vector<int>> numerical() const;
  // Rows labeled by cover index, entries "+t3", "-t1" or ".".
  std::string dump() const;
};

LinearSyzygyMatrix build_ls_matrix(const CoverGraph& cg);
// Requires an unmixed graph.
LinearSyzygyMatrix build_ls_matrix(const SimpleGraph& g);

// Rank of the numerical matrix by fraction-free elimination. Asserts that it
// equals rows minus the number of components of the cover graph.
int numerical_rank(const LinearSyzygyMatrix& m);
int exact_integer_rank(std::vector<std::vector<std::int64_t>> a);

struct Monomial {
  std::vector<std::uint16_t> exponents;

  int degree() const;
  VertexSet support() const;
  bool divides(const Monomial& other) const;
  std::string to_string() const;  // "t1*t3^2", "1" for the unit
  auto operator<=>(const Monomial&) const = default;
};

// Generators are pairwise non-dividing and sorted.
struct MonomialIdealLite {
  int vars = 0;
  std::vector<Monomial> generators;

  bool empty() const { return generators.empty(); }
};

MonomialIdealLite minimalize(int vars, std::vector<Monomial> gens);

struct MinorOptions {
  // Determinant evaluations plus branching expansion nodes.
  std::uint64_t budget = 10'000'000;
  // Skip column sets that contain a cycle of the cover graph. Such columns are
  // syzygies among at most as many generators as columns, hence dependent.
  bool forest_pruning = true;
};

struct MinorStats {
  std::uint64_t nodes = 0;
  std::uint64_t evaluated = 0;
  std::uint64_t nonzero = 0;
  bool stopped_early = false;
};

// Visits every nonzero k x k minor (as the monomial of +-t^a) in a
// deterministic order; the visitor returns false to stop. Every minor is
// checked to be a signed monomial. Throws ResourceError past the budget.
MinorStats for_each_minor(const LinearSyzygyMatrix& m, int k, const MinorOptions& options,
                          const std::function<bool(const Monomial&)>& visit);

MonomialIdealLite minors_ideal(const LinearSyzygyMatrix& m, int k, const MinorOptions& options = {},
                               MinorStats* stats = nullptr);

// Minimum number of variables meeting the support of every generator.
// Throws UndefinedError for the zero ideal and for the unit ideal.
int monomial_ideal_height(const MonomialIdealLite& ideal);

// Column c equals a - b for two other columns a, b.
struct ColumnRedundancy {
  int column = -1;
  int plus = -1;
  int minus = -1;
};

std::vector<ColumnRedundancy> column_redundancies(const LinearSyzygyMatrix& m);

struct SyzygyDecision {
  int rows = 0;
  int cols = 0;
  int rank = 0;
  int components = 0;
  bool rank_ok = false;                 // rank = rows - 1
  bool height_at_least_two = false;
  std::optional<int> height;            // exact when the minors were exhausted
  std::uint64_t minors_seen = 0;
  bool linearly_presented = false;
};

// Rank plus height of the ideal of (r-1)-minors. Stops enumerating minors once
// no variable divides all of those seen. Requires an unmixed graph with edges.
SyzygyDecision is_linearly_presented_via_syzygy(const SimpleGraph& g, const MinorOptions& options = {});
SyzygyDecision is_linearly_presented_via_syzygy(const CoverGraph& cg, const MinorOptions& options = {});

}  // namespace coverlab
