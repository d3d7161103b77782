#include "coverlab/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "coverlab/classify.hpp"
#include "coverlab/covers.hpp"
#include "coverlab/errors.hpp"

namespace coverlab {

namespace {

// Ordered equitable refinement: the new colour of v ranks (colour, sorted
// neighbour colours). Isomorphism invariant, and the colour order refines the
// old one.
void refine(const SimpleGraph& g, std::vector<int>& color) {
  const int n = g.order();
  int classes = 1 + *std::max_element(color.begin(), color.end());
  std::vector<std::pair<int, std::vector<int>>> sig(n);
  std::vector<int> order(n);
  for (;;) {
    for (int v = 0; v < n; ++v) {
      sig[v].first = color[v];
      sig[v].second.clear();
      for (int w : g.neighbors(v)) sig[v].second.push_back(color[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    int next = 0;
    for (int k = 0; k < n; ++k) {
      if (k > 0 && sig[order[k]] != sig[order[k - 1]]) ++next;
      color[order[k]] = next;
    }
    if (next + 1 == classes) return;
    classes = next + 1;
  }
}

struct Search {
  explicit Search(const SimpleGraph& graph) : g(graph) {}

  const SimpleGraph& g;
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> best_perm;
  bool found = false;

  std::uint64_t code_of(const std::vector<int>& perm) const {
    std::uint64_t code = 0;
    const int n = g.order();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) code = (code << 1) | (g.adjacent(perm[i], perm[j]) ? 1U : 0U);
    return code;
  }

  bool twins(int u, int v) const { return g.neighbors(u).without(v) == g.neighbors(v).without(u); }

  void run(std::vector<int> color) {
    refine(g, color);
    const int n = g.order();
    std::vector<int> size(n, 0);
    for (int c : color) ++size[c];
    int target = -1;
    for (int c = 0; c < n; ++c)
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
    if (target < 0) {
      std::vector<int> perm(n);
      for (int v = 0; v < n; ++v) perm[color[v]] = v;
      const std::uint64_t code = code_of(perm);
      if (!found || code < best) {
        best = code;
        best_perm = perm;
        found = true;
      }
      return;
    }
    std::vector<int> tried;
    for (int v = 0; v < n; ++v) {
      if (color[v] != target) continue;
      // Swapping two twins is an automorphism fixing the partition.
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) continue;
      tried.push_back(v);
      std::vector<int> next(n);
      for (int w = 0; w < n; ++w) next[w] = 2 * color[w] + ((color[w] == target && w != v) ? 1 : 0);
      run(std::move(next));
    }
  }
};

Search canonical_search(const SimpleGraph& g) {
  if (g.order() > kMaxCanonicalOrder)
    throw ResourceError("canonical form supports at most " + std::to_string(kMaxCanonicalOrder) + " vertices");
  Search s(g);
  if (g.order() == 0) {
    s.best = 0;
    return s;
  }
  s.run(std::vector<int>(g.order(), 0));
  return s;
}

std::vector<SimpleGraph> extend_classes(const std::vector<SimpleGraph>& smaller, int n) {
  std::map<std::uint64_t, SimpleGraph> found;
  for (const SimpleGraph& h : smaller) {
    std::vector<VertexSet> base = h.adjacency();
    base.emplace_back();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
      std::vector<VertexSet> adj = base;
      adj[n - 1] = VertexSet(mask);
      for (int v : VertexSet(mask)) adj[v].insert(n - 1);
      const SimpleGraph g = SimpleGraph::from_adjacency(std::move(adj));
      const std::uint64_t code = canonical_code(g);
      if (!found.count(code)) found.emplace(code, canonical_form(g));
    }
  }
  std::vector<SimpleGraph> out;
  out.reserve(found.size());
  for (auto& [code, g] : found) out.push_back(std::move(g));
  return out;
}

bool passes(const GraphEnumeration& spec, const SimpleGraph& g) {
  if (spec.no_isolated && !g.isolated_vertices().empty()) return false;
  if (spec.bipartite_only && !is_bipartite(g)) return false;
  if (spec.unmixed_only && !minimal_vertex_covers(g).unmixed) return false;
  if (spec.konig_only && !is_konig(g)) return false;
  return true;
}

}  // namespace

std::uint64_t canonical_code(const SimpleGraph& g) { return canonical_search(g).best; }

SimpleGraph canonical_form(const SimpleGraph& g) {
  const Search s = canonical_search(g);
  const int n = g.order();
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[s.best_perm[i]] = i;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(position[e.u], position[e.v]);
  return SimpleGraph::from_edges(n, edges);
}

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b);
}

const std::vector<SimpleGraph>& isomorphism_classes(int n) {
  if (n < 0 || n > kMaxDedupOrder)
    throw ResourceError("isomorphism classes are generated for at most " + std::to_string(kMaxDedupOrder) +
                        " vertices");
  static std::mutex mutex;
  static std::map<int, std::vector<SimpleGraph>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (cache.empty()) cache.emplace(0, std::vector<SimpleGraph>{SimpleGraph(0)});
  for (int k = 1; k <= n; ++k)
    if (!cache.count(k)) cache.emplace(k, extend_classes(cache.at(k - 1), k));
  return cache.at(n);
}

void enumerate_graphs(const GraphEnumeration& spec, const std::function<void(const SimpleGraph&)>& visit) {
  if (spec.n < 0) throw PreconditionError("negative vertex count");
  if (spec.dedup_isomorphic) {
    for (const SimpleGraph& g : isomorphism_classes(spec.n))
      if (passes(spec, g)) visit(g);
    return;
  }
  if (spec.n > kMaxLabeledOrder)
    throw ResourceError("labeled enumeration supports at most " + std::to_string(kMaxLabeledOrder) + " vertices");
  std::vector<Edge> all;
  for (int u = 0; u < spec.n; ++u)
    for (int v = u + 1; v < spec.n; ++v) all.emplace_back(u, v);
  const std::uint64_t limit = std::uint64_t{1} << all.size();
  std::vector<Edge> chosen;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    chosen.clear();
    for (std::size_t k = 0; k < all.size(); ++k)
      if ((mask >> k) & 1U) chosen.push_back(all[k]);
    const SimpleGraph g = SimpleGraph::from_edges(spec.n, chosen);
    if (passes(spec, g)) visit(g);
  }
}

std::vector<SimpleGraph> enumerate_graphs(const GraphEnumeration& spec) {
  std::vector<SimpleGraph> out;
  enumerate_graphs(spec, [&](const SimpleGraph& g) { out.push_back(g); });
  return out;
}

}  // namespace coverlab
