#include "coverlab/syzygy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "coverlab/errors.hpp"

namespace coverlab {

SignedVariable LinearSyzygyMatrix::entry(int row, int col) const {
  const LsColumn& c = columns[col];
  if (row == c.i) return {+1, c.in_vertex};
  if (row == c.j) return {-1, c.out_vertex};
  return {};
}

std::vector<std::vector<int>> LinearSyzygyMatrix::numerical() const {
  std::vector<std::vector<int>> a(rows, std::vector<int>(cols(), 0));
  for (int q = 0; q < cols(); ++q) {
    a[columns[q].i][q] = 1;
    a[columns[q].j][q] = -1;
  }
  return a;
}

std::string LinearSyzygyMatrix::dump() const {
  std::vector<std::vector<std::string>> cells(rows + 1, std::vector<std::string>(cols() + 1));
  for (int q = 0; q < cols(); ++q)
    cells[0][q + 1] = std::to_string(columns[q].i + 1) + "-" + std::to_string(columns[q].j + 1);
  for (int r = 0; r < rows; ++r) {
    cells[r + 1][0] = "C" + std::to_string(r + 1);
    for (int q = 0; q < cols(); ++q) {
      const SignedVariable e = entry(r, q);
      cells[r + 1][q + 1] = e.zero() ? "." : (e.sign > 0 ? "+t" : "-t") + std::to_string(e.var + 1);
    }
  }
  std::vector<std::size_t> width(cols() + 1, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      line += std::string(width[c] - row[c].size(), ' ') + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

LinearSyzygyMatrix build_ls_matrix(const CoverGraph& cg) {
  LinearSyzygyMatrix m;
  m.rows = cg.order();
  m.vars = cg.family.n;
  m.covers = cg.family.covers;
  for (const CoverGraphEdge& e : cg.edges) {
    LsColumn c{e.i, e.j, e.out_vertex, e.in_vertex};
    // t_in * t^{C_i} = t_out * t^{C_j} as squarefree-plus-one monomials.
    const VertexSet ci = cg.family[e.i], cj = cg.family[e.j];
    check_invariant(!ci.contains(c.in_vertex) && !cj.contains(c.out_vertex) &&
                        ci.with(c.in_vertex) == cj.with(c.out_vertex),
                    "column monomial identity fails for covers " + ci.to_string() + ", " + cj.to_string());
    m.columns.push_back(c);
  }
  return m;
}

LinearSyzygyMatrix build_ls_matrix(const SimpleGraph& g) { return build_ls_matrix(build_cover_graph(g)); }

int exact_integer_rank(std::vector<std::vector<std::int64_t>> a) {
  const int rows = static_cast<int>(a.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(a[0].size());
  int rank = 0;
  std::int64_t prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        const __int128 num = static_cast<__int128>(a[rank][col]) * a[r][c] -
                             static_cast<__int128>(a[r][col]) * a[rank][c];
        check_invariant(num % prev == 0, "fraction-free elimination produced a remainder");
        a[r][c] = static_cast<std::int64_t>(num / prev);
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

int numerical_rank(const LinearSyzygyMatrix& m) {
  std::vector<std::vector<std::int64_t>> a(m.rows, std::vector<std::int64_t>(m.cols(), 0));
  for (int q = 0; q < m.cols(); ++q) {
    a[m.columns[q].i][q] = 1;
    a[m.columns[q].j][q] = -1;
  }
  const int rank = exact_integer_rank(std::move(a));

  std::vector<int> parent(m.rows);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = m.rows;
  for (const LsColumn& c : m.columns) {
    const int a1 = find(c.i), b1 = find(c.j);
    if (a1 != b1) {
      parent[a1] = b1;
      --components;
    }
  }
  check_invariant(rank == m.rows - components,
                  "rank " + std::to_string(rank) + " differs from rows minus components " +
                      std::to_string(m.rows - components));
  return rank;
}

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

VertexSet Monomial::support() const {
  VertexSet s;
  for (std::size_t v = 0; v < exponents.size(); ++v)
    if (exponents[v] > 0) s.insert(static_cast<int>(v));
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t v = 0; v < exponents.size(); ++v)
    if (exponents[v] > other.exponents[v]) return false;
  return true;
}

std::string Monomial::to_string() const {
  std::string s;
  for (std::size_t v = 0; v < exponents.size(); ++v) {
    if (exponents[v] == 0) continue;
    if (!s.empty()) s += '*';
    s += 't' + std::to_string(v + 1);
    if (exponents[v] > 1) s += '^' + std::to_string(exponents[v]);
  }
  return s.empty() ? "1" : s;
}

MonomialIdealLite minimalize(int vars, std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) {
              const int da = a.degree(), db = b.degree();
              return da != db ? da < db : a < b;
            });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  MonomialIdealLite ideal;
  ideal.vars = vars;
  for (const Monomial& m : gens) {
    const bool redundant = std::any_of(ideal.generators.begin(), ideal.generators.end(),
                                       [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) ideal.generators.push_back(m);
  }
  std::sort(ideal.generators.begin(), ideal.generators.end());
  return ideal;
}

namespace {

using Exponents = std::vector<std::uint16_t>;
using Poly = std::map<Exponents, long long>;

void add_into(Poly& acc, const Poly& p, long long scale) {
  for (const auto& [m, c] : p) {
    long long& slot = acc[m];
    slot += scale * c;
    if (slot == 0) acc.erase(m);
  }
}

Poly times_monomial(const Poly& p, int sign, const Exponents& e) {
  Poly out;
  for (const auto& [m, c] : p) {
    Exponents x = m;
    for (std::size_t v = 0; v < x.size(); ++v) x[v] = static_cast<std::uint16_t>(x[v] + e[v]);
    out.emplace(std::move(x), sign * c);
  }
  return out;
}

// Laplace expansion for submatrices whose columns hold at most two nonzeros.
class DeterminantEngine {
 public:
  DeterminantEngine(const LinearSyzygyMatrix& m, int k, std::uint64_t budget)
      : m_(m), k_(k), budget_(budget) {}

  Poly det(std::vector<int> rows, std::vector<int> cols) {
    tick();
    return expand(std::move(rows), std::move(cols));
  }

  std::uint64_t nodes() const { return nodes_; }
  void reset_memo() { memo_.clear(); }

 private:
  void tick() {
    if (++nodes_ > budget_)
      throw ResourceError("minor budget of " + std::to_string(budget_) + " nodes exceeded for a " +
                          std::to_string(m_.rows) + " x " + std::to_string(m_.cols()) +
                          " matrix with k = " + std::to_string(k_));
  }

  static int position(const std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    return (it != v.end() && *it == x) ? static_cast<int>(it - v.begin()) : -1;
  }

  Poly expand(std::vector<int> rows, std::vector<int> cols) {
    int sign = 1;
    Exponents factor(m_.vars, 0);
    for (;;) {
      const int k = static_cast<int>(rows.size());
      if (k == 0) return Poly{{factor, sign}};
      bool reduced = false;
      for (int q = 0; q < k && !reduced; ++q) {
        const LsColumn& c = m_.columns[cols[q]];
        const int pi = position(rows, c.i), pj = position(rows, c.j);
        if (pi < 0 && pj < 0) return {};
        if (pi >= 0 && pj >= 0) continue;
        const int p = pi >= 0 ? pi : pj;
        const SignedVariable e = m_.entry(rows[p], cols[q]);
        sign *= e.sign * (((p + q) % 2) ? -1 : 1);
        ++factor[e.var];
        rows.erase(rows.begin() + p);
        cols.erase(cols.begin() + q);
        reduced = true;
      }
      if (reduced) continue;
      // Every column has both nonzeros live. Look for a row with one entry.
      for (int p = 0; p < k && !reduced; ++p) {
        int hits = 0, where = -1;
        for (int q = 0; q < k; ++q) {
          const LsColumn& c = m_.columns[cols[q]];
          if (c.i == rows[p] || c.j == rows[p]) {
            ++hits;
            where = q;
          }
        }
        if (hits == 0) return {};
        if (hits == 1) {
          const SignedVariable e = m_.entry(rows[p], cols[where]);
          sign *= e.sign * (((p + where) % 2) ? -1 : 1);
          ++factor[e.var];
          rows.erase(rows.begin() + p);
          cols.erase(cols.begin() + where);
          reduced = true;
        }
      }
      if (reduced) continue;
      return times_monomial(branch(rows, cols), sign, factor);
    }
  }

  // Expand along the first column; both of its entries are live.
  Poly branch(const std::vector<int>& rows, const std::vector<int>& cols) {
    std::string key;
    key.reserve(rows.size() + cols.size() + 1);
    for (int r : rows) key += static_cast<char>(r);
    key += '|';
    for (int c : cols) key += static_cast<char>(c & 0x7f), key += static_cast<char>(c >> 7);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    tick();
    const LsColumn& c = m_.columns[cols[0]];
    const std::vector<int> rest_cols(cols.begin() + 1, cols.end());
    Poly total;
    for (int row : {c.i, c.j}) {
      const int p = position(rows, row);
      const SignedVariable e = m_.entry(row, cols[0]);
      std::vector<int> rest_rows = rows;
      rest_rows.erase(rest_rows.begin() + p);
      Exponents unit(m_.vars, 0);
      ++unit[e.var];
      add_into(total, times_monomial(expand(rest_rows, rest_cols), e.sign * ((p % 2) ? -1 : 1), unit), 1);
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  const LinearSyzygyMatrix& m_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::unordered_map<std::string, Poly> memo_;
};

// Union-find over rows with undo, for forest pruning.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }
  void undo() {
    const int b = history_.back();
    history_.pop_back();
    const int a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

class MinorWalker {
 public:
  MinorWalker(const LinearSyzygyMatrix& m, int k, const MinorOptions& options,
              const std::function<bool(const Monomial&)>& visit)
      : m_(m), k_(k), options_(options), visit_(visit), engine_(m, k, options.budget), uf_(m.rows) {}

  MinorStats run() {
    if (k_ == 0) {
      emit(std::vector<int>{}, std::vector<int>{});
    } else {
      choose_columns(0);
    }
    stats_.nodes = engine_.nodes();
    return stats_;
  }

 private:
  void choose_columns(int from) {
    if (stop_) return;
    if (static_cast<int>(chosen_.size()) == k_) {
      choose_rows();
      return;
    }
    const int need = k_ - static_cast<int>(chosen_.size());
    for (int q = from; q + need <= m_.cols() && !stop_; ++q) {
      const LsColumn& c = m_.columns[q];
      bool merged = true;
      if (options_.forest_pruning) {
        merged = uf_.unite(c.i, c.j);
        if (!merged) continue;
      }
      chosen_.push_back(q);
      choose_columns(q + 1);
      chosen_.pop_back();
      if (options_.forest_pruning) uf_.undo();
    }
  }

  void choose_rows() {
    VertexSetList touched;
    for (int q : chosen_) {
      touched.insert(m_.columns[q].i);
      touched.insert(m_.columns[q].j);
    }
    rows_pool_.assign(touched.begin(), touched.end());
    const int drop = static_cast<int>(rows_pool_.size()) - k_;
    if (drop < 0) return;
    if (options_.forest_pruning) {
      // Drop exactly one row from every tree of the forest.
      std::map<int, std::vector<int>> trees;
      for (int r : rows_pool_) trees[uf_.find(r)].push_back(r);
      std::vector<std::vector<int>> groups;
      for (auto& [root, members] : trees) groups.push_back(std::move(members));
      std::vector<int> dropped;
      drop_one_per_tree(groups, 0, dropped);
    } else {
      std::vector<char> dropped(m_.rows, 0);
      drop_any(0, drop, dropped);
    }
  }

  void drop_one_per_tree(const std::vector<std::vector<int>>& groups, std::size_t g, std::vector<int>& dropped) {
    if (stop_) return;
    if (g == groups.size()) {
      std::vector<int> rows;
      for (int r : rows_pool_)
        if (std::find(dropped.begin(), dropped.end(), r) == dropped.end()) rows.push_back(r);
      emit(rows, chosen_);
      return;
    }
    for (int r : groups[g]) {
      dropped.push_back(r);
      drop_one_per_tree(groups, g + 1, dropped);
      dropped.pop_back();
      if (stop_) return;
    }
  }

  // Choose `left` rows of rows_pool_[idx..] to drop, never both rows of a chosen column.
  void drop_any(std::size_t idx, int left, std::vector<char>& dropped) {
    if (stop_) return;
    if (left == 0) {
      std::vector<int> rows;
      for (int r : rows_pool_)
        if (!dropped[r]) rows.push_back(r);
      emit(rows, chosen_);
      return;
    }
    if (rows_pool_.size() - idx < static_cast<std::size_t>(left)) return;
    const int r = rows_pool_[idx];
    dropped[r] = 1;
    bool orphan = false;
    for (int q : chosen_) {
      const LsColumn& c = m_.columns[q];
      if (dropped[c.i] && dropped[c.j]) {
        orphan = true;
        break;
      }
    }
    if (!orphan) drop_any(idx + 1, left - 1, dropped);
    dropped[r] = 0;
    drop_any(idx + 1, left, dropped);
  }

  void emit(const std::vector<int>& rows, const std::vector<int>& cols) {
    ++stats_.evaluated;
    const Poly p = engine_.det(rows, cols);
    if (p.empty()) return;
    auto describe = [&] {
      std::string s = "rows";
      for (int r : rows) s += ' ' + std::to_string(r + 1);
      s += ", columns";
      for (int c : cols) s += ' ' + std::to_string(c + 1);
      return s;
    };
    check_invariant(p.size() == 1 && (p.begin()->second == 1 || p.begin()->second == -1),
                    "minor is not a signed monomial (" + describe() + ")");
    ++stats_.nonzero;
    Monomial mono{p.begin()->first};
    if (!visit_(mono)) {
      stop_ = true;
      stats_.stopped_early = true;
    }
  }

  using VertexSetList = std::set<int>;

  const LinearSyzygyMatrix& m_;
  int k_;
  MinorOptions options_;
  const std::function<bool(const Monomial&)>& visit_;
  DeterminantEngine engine_;
  RollbackUnionFind uf_;
  std::vector<int> chosen_;
  std::vector<int> rows_pool_;
  MinorStats stats_;
  bool stop_ = false;
};

}  // namespace

MinorStats for_each_minor(const LinearSyzygyMatrix& m, int k, const MinorOptions& options,
                          const std::function<bool(const Monomial&)>& visit) {
  if (k < 0 || k > std::min(m.rows, m.cols()))
    throw PreconditionError("minor size " + std::to_string(k) + " exceeds min(rows, cols) = " +
                            std::to_string(std::min(m.rows, m.cols())));
  MinorWalker walker(m, k, options, visit);
  return walker.run();
}

MonomialIdealLite minors_ideal(const LinearSyzygyMatrix& m, int k, const MinorOptions& options, MinorStats* stats) {
  std::set<Monomial> seen;
  const MinorStats st = for_each_minor(m, k, options, [&](const Monomial& mono) {
    seen.insert(mono);
    return true;
  });
  if (stats) *stats = st;
  return minimalize(m.vars, std::vector<Monomial>(seen.begin(), seen.end()));
}

namespace {

void hitting_set(const std::vector<VertexSet>& sets, VertexSet chosen, int& best) {
  if (chosen.size() >= best) return;
  const VertexSet* open = nullptr;
  for (const VertexSet& s : sets)
    if (!s.intersects(chosen) && (open == nullptr || s.size() < open->size())) open = &s;
  if (open == nullptr) {
    best = chosen.size();
    return;
  }
  if (chosen.size() + 1 >= best) return;
  for (int v : *open) hitting_set(sets, chosen.with(v), best);
}

}  // namespace

int monomial_ideal_height(const MonomialIdealLite& ideal) {
  if (ideal.generators.empty()) throw UndefinedError("height of the zero ideal is undefined");
  std::vector<VertexSet> supports;
  for (const Monomial& m : ideal.generators) {
    if (m.degree() == 0) throw UndefinedError("height of the unit ideal is undefined");
    supports.push_back(m.support());
  }
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  int best = ideal.vars + 1;
  hitting_set(supports, VertexSet{}, best);
  return best;
}

std::vector<ColumnRedundancy> column_redundancies(const LinearSyzygyMatrix& m) {
  using Sparse = std::map<std::pair<int, int>, int>;
  std::vector<Sparse> cols;
  for (int q = 0; q < m.cols(); ++q) {
    const LsColumn& c = m.columns[q];
    cols.push_back({{{c.i, c.in_vertex}, 1}, {{c.j, c.out_vertex}, -1}});
  }
  std::vector<ColumnRedundancy> out;
  for (int c = 0; c < m.cols(); ++c) {
    for (int a = 0; a < m.cols(); ++a) {
      if (a == c) continue;
      for (int b = 0; b < m.cols(); ++b) {
        if (b == c || b == a) continue;
        Sparse diff = cols[a];
        for (const auto& [key, v] : cols[b]) {
          int& slot = diff[key];
          slot -= v;
          if (slot == 0) diff.erase(key);
        }
        if (diff == cols[c]) out.push_back({c, a, b});
      }
    }
  }
  return out;
}

SyzygyDecision is_linearly_presented_via_syzygy(const SimpleGraph& g, const MinorOptions& options) {
  if (!g.has_edges()) throw PreconditionError("linear presentation needs a graph with edges");
  return is_linearly_presented_via_syzygy(build_cover_graph(g), options);
}

SyzygyDecision is_linearly_presented_via_syzygy(const CoverGraph& cg, const MinorOptions& options) {
  const LinearSyzygyMatrix m = build_ls_matrix(cg);
  SyzygyDecision d;
  d.rows = m.rows;
  d.cols = m.cols();
  d.rank = numerical_rank(m);
  d.components = cg.component_count();
  d.rank_ok = d.rank == m.rows - 1;
  if (!d.rank_ok) return d;

  VertexSet common = VertexSet::first(m.vars);
  std::set<Monomial> seen;
  const MinorStats st = for_each_minor(m, m.rows - 1, options, [&](const Monomial& mono) {
    common &= mono.support();
    seen.insert(mono);
    return !common.empty();
  });
  d.minors_seen = st.nonzero;
  check_invariant(!seen.empty(), "rank r - 1 but no nonzero (r-1)-minor");
  if (st.stopped_early) {
    d.height_at_least_two = true;
  } else {
    d.height = monomial_ideal_height(minimalize(m.vars, std::vector<Monomial>(seen.begin(), seen.end())));
    d.height_at_least_two = *d.height >= 2;
    check_invariant(d.height_at_least_two == common.empty(), "height and common support disagree");
  }
  d.linearly_presented = d.height_at_least_two;
  return d;
}

}  // namespace coverlab
