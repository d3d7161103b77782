#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>

namespace oracle {

using coverlab::SimpleGraph;

namespace {

int popcount(Mask m) { return std::popcount(m); }

std::vector<std::pair<int, int>> edge_list(const SimpleGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

// Subsets of {0..n-1} in order of size, then value.
std::vector<Mask> subsets_by_size(int n) {
  std::vector<Mask> all(std::size_t{1} << n);
  std::iota(all.begin(), all.end(), Mask{0});
  std::stable_sort(all.begin(), all.end(), [](Mask a, Mask b) { return popcount(a) < popcount(b); });
  return all;
}

}  // namespace

bool is_cover(const SimpleGraph& g, Mask c) {
  for (auto [u, v] : edge_list(g))
    if (!((c >> u) & 1) && !((c >> v) & 1)) return false;
  return true;
}

bool is_stable(const SimpleGraph& g, Mask s) {
  for (auto [u, v] : edge_list(g))
    if (((s >> u) & 1) && ((s >> v) & 1)) return false;
  return true;
}

std::vector<Mask> minimal_covers(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<Mask> covers;
  for (Mask c = 0; c < (Mask{1} << n); ++c)
    if (is_cover(g, c)) covers.push_back(c);
  std::vector<Mask> out;
  for (Mask c : covers) {
    bool minimal = true;
    for (Mask d : covers)
      if (d != c && (d & c) == d) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(c);
  }
  return out;
}

int exchange_number(const SimpleGraph& g) {
  const auto edges = edge_list(g);
  for (Mask c : subsets_by_size(g.order())) {
    if (!is_cover(g, c)) continue;
    for (auto [u, v] : edges)
      for (auto [k, l] : {std::pair{u, v}, std::pair{v, u}}) {
        if (!((c >> k) & 1) || ((c >> l) & 1)) continue;
        if (is_cover(g, (c & ~(Mask{1} << k)) | (Mask{1} << l))) return popcount(c);
      }
  }
  return -1;
}

Ideal minimalize(std::vector<Mask> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  Ideal out;
  for (Mask a : gens) {
    bool keep = true;
    for (Mask b : gens)
      if (b != a && (b & a) == b) {
        keep = false;
        break;
      }
    if (keep) out.push_back(a);
  }
  return out;
}

Ideal colon(const Ideal& ideal, Mask a) {
  std::vector<Mask> gens;
  for (Mask g : ideal) gens.push_back(g & ~a);
  return minimalize(gens);
}

namespace {

Ideal prime_of(const std::vector<int>& vars) {
  Ideal p;
  for (int v : vars) p.push_back(Mask{1} << v);
  std::sort(p.begin(), p.end());
  return p;
}

Ideal cover_ideal(const SimpleGraph& g) { return minimalize(minimal_covers(g)); }

}  // namespace

int v_at_edge(const SimpleGraph& g, int k, int l) {
  const Ideal ic = cover_ideal(g);
  const Ideal p = prime_of({k, l});
  for (Mask a : subsets_by_size(g.order()))
    if (colon(ic, a) == p) return popcount(a);
  return -1;
}

int v_cover_ideal(const SimpleGraph& g) {
  const Ideal ic = cover_ideal(g);
  std::vector<Ideal> primes;
  for (auto [u, v] : edge_list(g)) primes.push_back(prime_of({u, v}));
  for (Mask a : subsets_by_size(g.order())) {
    const Ideal c = colon(ic, a);
    if (std::find(primes.begin(), primes.end(), c) != primes.end()) return popcount(a);
  }
  return -1;
}

std::optional<int> v_edge_ideal(const SimpleGraph& g) {
  std::vector<Mask> gens;
  for (auto [u, v] : edge_list(g)) gens.push_back((Mask{1} << u) | (Mask{1} << v));
  if (gens.empty()) return std::nullopt;
  const Ideal ig = minimalize(gens);
  std::vector<Ideal> primes;
  for (Mask c : minimal_covers(g)) {
    std::vector<int> vars;
    for (int v = 0; v < g.order(); ++v)
      if ((c >> v) & 1) vars.push_back(v);
    primes.push_back(prime_of(vars));
  }
  for (Mask a : subsets_by_size(g.order())) {
    const Ideal c = colon(ig, a);
    if (std::find(primes.begin(), primes.end(), c) != primes.end()) return popcount(a);
  }
  return std::nullopt;
}

namespace {

void matchings(const std::vector<std::pair<int, int>>& edges, std::size_t from, Mask used, int size, int& best,
               int n, int& perfect) {
  best = std::max(best, size);
  if (2 * size == n) {
    ++perfect;
    return;
  }
  for (std::size_t k = from; k < edges.size(); ++k) {
    const auto [u, v] = edges[k];
    if (((used >> u) & 1) || ((used >> v) & 1)) continue;
    matchings(edges, k + 1, used | (Mask{1} << u) | (Mask{1} << v), size + 1, best, n, perfect);
  }
}

}  // namespace

int maximum_matching(const SimpleGraph& g) {
  int best = 0, perfect = 0;
  matchings(edge_list(g), 0, 0, 0, best, g.order(), perfect);
  return best;
}

int perfect_matching_count(const SimpleGraph& g) {
  if (g.order() % 2) return 0;
  int best = 0, perfect = 0;
  matchings(edge_list(g), 0, 0, 0, best, g.order(), perfect);
  return perfect;
}

namespace {

bool joined_within(const std::vector<Mask>& covers, int alpha0, std::size_t i, std::size_t j, Mask within) {
  std::vector<bool> seen(covers.size(), false);
  std::queue<std::size_t> q;
  q.push(i);
  seen[i] = true;
  while (!q.empty()) {
    const std::size_t a = q.front();
    q.pop();
    if (a == j) return true;
    for (std::size_t b = 0; b < covers.size(); ++b)
      if (!seen[b] && (covers[b] & ~within) == 0 && popcount(covers[a] & covers[b]) == alpha0 - 1) {
        seen[b] = true;
        q.push(b);
      }
  }
  return false;
}

}  // namespace

bool linearly_presented(const SimpleGraph& g) {
  const std::vector<Mask> covers = minimal_covers(g);
  const int alpha0 = popcount(covers.front());
  for (std::size_t i = 0; i < covers.size(); ++i)
    for (std::size_t j = i + 1; j < covers.size(); ++j)
      if (!joined_within(covers, alpha0, i, j, covers[i] | covers[j])) return false;
  return true;
}

int cover_graph_components(const SimpleGraph& g) {
  const std::vector<Mask> covers = minimal_covers(g);
  const int alpha0 = popcount(covers.front());
  std::vector<int> comp(covers.size(), -1);
  int count = 0;
  for (std::size_t s = 0; s < covers.size(); ++s) {
    if (comp[s] >= 0) continue;
    for (std::size_t t = 0; t < covers.size(); ++t)
      if (comp[t] < 0 && joined_within(covers, alpha0, s, t, ~Mask{0})) comp[t] = count;
    ++count;
  }
  return count;
}

int rank_mod_p(std::vector<std::vector<std::int64_t>> a) {
  constexpr std::int64_t p = 1'000'000'007;
  auto inverse = [](std::int64_t x) {
    std::int64_t r = 1, e = p - 2;
    x %= p;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  for (auto& row : a)
    for (auto& x : row) x = ((x % p) + p) % p;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c]) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    const std::int64_t inv = inverse(a[rank][c]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || !a[r][c]) continue;
      const std::int64_t f = a[r][c] * inv % p;
      for (int k = c; k < cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

Poly leibniz_determinant(const std::vector<std::vector<Entry>>& m, int vars) {
  const int k = static_cast<int>(m.size());
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Poly out;
  do {
    int sign = 1;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    std::int64_t coeff = sign;
    std::vector<int> exps(vars, 0);
    for (int i = 0; i < k && coeff; ++i) {
      const Entry& e = m[i][perm[i]];
      coeff *= e.coeff;
      if (e.var >= 0) ++exps[e.var];
    }
    if (coeff) {
      out[exps] += coeff;
      if (out[exps] == 0) out.erase(exps);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::uint64_t brute_canonical(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) code = (code << 1) | (g.adjacent(perm[i], perm[j]) ? 1U : 0U);
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace oracle
