#include "coverlab/graph.hpp"

#include <algorithm>
#include <functional>

namespace coverlab {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices)
    throw InvalidGraph("vertex count " + std::to_string(n) + " outside 0.." +
                       std::to_string(kMaxVertices));
}

void check_pair(int n, int a, int b) {
  if (a < 0 || b < 0 || a >= n || b >= n)
    throw InvalidGraph("edge {" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                       "} has an endpoint outside 1.." + std::to_string(n));
  if (a == b) throw InvalidGraph("loop at vertex " + std::to_string(a + 1));
}

}  // namespace

std::string Edge::to_string() const {
  return "t" + std::to_string(u + 1) + "-t" + std::to_string(v + 1);
}

SimpleGraph::SimpleGraph(int n) {
  check_order(n);
  adj_.assign(n, VertexSet{});
}

SimpleGraph SimpleGraph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
  SimpleGraph g(n);
  for (auto [a, b] : edges) {
    check_pair(n, a, b);
    g.adj_[a].insert(b);
    g.adj_[b].insert(a);
  }
  return g;
}

SimpleGraph SimpleGraph::from_edges(int n, std::span<const Edge> edges) {
  SimpleGraph g(n);
  for (const Edge& e : edges) {
    check_pair(n, e.u, e.v);
    g.adj_[e.u].insert(e.v);
    g.adj_[e.v].insert(e.u);
  }
  return g;
}

SimpleGraph SimpleGraph::from_adjacency(std::vector<VertexSet> adj) {
  const int n = static_cast<int>(adj.size());
  check_order(n);
  const VertexSet all = VertexSet::first(n);
  for (int v = 0; v < n; ++v) {
    if (!adj[v].is_subset_of(all)) throw InvalidGraph("neighbor outside vertex range");
    if (adj[v].contains(v)) throw InvalidGraph("loop at vertex " + std::to_string(v + 1));
    for (int u : adj[v])
      if (!adj[u].contains(v)) throw InvalidGraph("asymmetric adjacency");
  }
  SimpleGraph g;
  g.adj_ = std::move(adj);
  return g;
}

VertexSet SimpleGraph::neighbors(VertexSet a) const {
  VertexSet out;
  for (int v : a) out |= adj_[v];
  return out;
}

int SimpleGraph::edge_count() const {
  int twice = 0;
  for (VertexSet s : adj_) twice += s.size();
  return twice / 2;
}

bool SimpleGraph::has_edges() const {
  return std::any_of(adj_.begin(), adj_.end(), [](VertexSet s) { return !s.empty(); });
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool SimpleGraph::is_stable(VertexSet s) const {
  for (int v : s)
    if (adj_[v].intersects(s)) return false;
  return true;
}

bool SimpleGraph::is_vertex_cover(VertexSet c) const {
  // Complement of a cover is stable.
  return is_stable(vertices() - c);
}

VertexSet SimpleGraph::isolated_vertices() const {
  VertexSet out;
  for (int v = 0; v < order(); ++v)
    if (adj_[v].empty()) out.insert(v);
  return out;
}

std::string SimpleGraph::to_string() const {
  std::string s;
  for (const Edge& e : edges()) {
    if (!s.empty()) s += ',';
    s += e.to_string();
  }
  return s;
}

VertexSet InducedSubgraph::lift(VertexSet local) const {
  VertexSet out;
  for (int v : local) out.insert(to_parent[v]);
  return out;
}

InducedSubgraph induced_subgraph(const SimpleGraph& g, VertexSet keep) {
  keep &= g.vertices();
  InducedSubgraph out;
  out.to_parent = keep.to_vector();
  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) local[out.to_parent[i]] = static_cast<int>(i);
  std::vector<VertexSet> adj(out.to_parent.size());
  for (std::size_t i = 0; i < out.to_parent.size(); ++i)
    for (int w : g.neighbors(out.to_parent[i]) & keep) adj[i].insert(local[w]);
  out.graph = SimpleGraph::from_adjacency(std::move(adj));
  return out;
}

SimpleGraph complement(const SimpleGraph& g) {
  const VertexSet all = g.vertices();
  std::vector<VertexSet> adj(g.order());
  for (int v = 0; v < g.order(); ++v) adj[v] = (all - g.neighbors(v)).without(v);
  return SimpleGraph::from_adjacency(std::move(adj));
}

namespace {

SimpleGraph combine(const SimpleGraph& g1, const SimpleGraph& g2, bool cross) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  if (n1 + n2 > kMaxVertices) throw InvalidGraph("combined graph exceeds 64 vertices");
  std::vector<VertexSet> adj(n1 + n2);
  const VertexSet second(VertexSet::first(n1 + n2) - VertexSet::first(n1));
  for (int v = 0; v < n1; ++v) {
    adj[v] = g1.neighbors(v);
    if (cross) adj[v] |= second;
  }
  for (int v = 0; v < n2; ++v) {
    adj[n1 + v] = VertexSet(g2.neighbors(v).bits() << n1);
    if (cross) adj[n1 + v] |= VertexSet::first(n1);
  }
  return SimpleGraph::from_adjacency(std::move(adj));
}

}  // namespace

SimpleGraph disjoint_union(const SimpleGraph& g1, const SimpleGraph& g2) { return combine(g1, g2, false); }
SimpleGraph join(const SimpleGraph& g1, const SimpleGraph& g2) { return combine(g1, g2, true); }

std::vector<VertexSet> connected_components(const SimpleGraph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::singleton(unseen.lowest());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next = g.neighbors(frontier) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    unseen -= comp;
  }
  return out;
}

bool is_connected(const SimpleGraph& g) { return connected_components(g).size() <= 1; }

std::optional<std::vector<int>> bipartition(const SimpleGraph& g) {
  std::vector<int> side(g.order(), -1);
  for (VertexSet comp : connected_components(g)) {
    std::vector<int> stack{comp.lowest()};
    side[comp.lowest()] = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

std::vector<FourCycle> four_cycles(const SimpleGraph& g) {
  std::vector<FourCycle> out;
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    const VertexSet above = VertexSet::first(n) - VertexSet::first(a + 1);
    const VertexSet na = g.neighbors(a) & above;
    for (int b : na) {
      for (int d : na) {
        if (d <= b) continue;
        for (int c : g.neighbors(b) & g.neighbors(d) & above) {
          FourCycle fc;
          fc.v = {a, b, c, d};
          fc.chordless = !g.adjacent(a, c) && !g.adjacent(b, d);
          out.push_back(fc);
        }
      }
    }
  }
  return out;
}

bool has_3_cycle(const SimpleGraph& g) {
  for (const Edge& e : g.edges())
    if (g.neighbors(e.u).intersects(g.neighbors(e.v))) return true;
  return false;
}

bool has_5_cycle(const SimpleGraph& g) {
  // Closed walks a-b-c-d-e-a on distinct vertices with a the smallest.
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    const VertexSet above = VertexSet::first(n) - VertexSet::first(a + 1);
    for (int b : g.neighbors(a) & above)
      for (int c : g.neighbors(b) & above)
        for (int d : (g.neighbors(c) & above).without(b))
          if ((g.neighbors(d) & g.neighbors(a) & above).without(b).without(c).size() > 0) return true;
  }
  return false;
}

CycleReport cycle_queries(const SimpleGraph& g) {
  CycleReport r;
  r.has_3_cycle = has_3_cycle(g);
  r.has_5_cycle = has_5_cycle(g);
  r.four_cycles = four_cycles(g);
  r.has_induced_4_cycle =
      std::any_of(r.four_cycles.begin(), r.four_cycles.end(), [](const FourCycle& c) { return c.chordless; });
  return r;
}

int maximum_matching_size(const SimpleGraph& g) {
  int best = 0;
  // Branch on the lowest live vertex: leave it unmatched or match it to a live neighbor.
  std::function<void(VertexSet, int)> go = [&](VertexSet live, int have) {
    VertexSet useful;
    for (int v : live)
      if (g.neighbors(v).intersects(live)) useful.insert(v);
    if (have + useful.size() / 2 <= best) return;
    if (useful.empty()) {
      best = std::max(best, have);
      return;
    }
    const int v = useful.lowest();
    for (int w : g.neighbors(v) & useful) go(useful.without(v).without(w), have + 1);
    go(useful.without(v), have);
  };
  go(g.vertices(), 0);
  return best;
}

std::vector<Matching> all_perfect_matchings(const SimpleGraph& g) {
  std::vector<Matching> out;
  if (g.order() % 2 != 0) return out;
  Matching current;
  std::function<void(VertexSet)> go = [&](VertexSet live) {
    if (live.empty()) {
      out.push_back(current);
      return;
    }
    const int v = live.lowest();
    for (int w : g.neighbors(v) & live) {
      current.emplace_back(v, w);
      go(live.without(v).without(w));
      current.pop_back();
    }
  };
  go(g.vertices());
  return out;
}

bool is_matching(const SimpleGraph& g, const Matching& m) {
  VertexSet used;
  for (const Edge& e : m) {
    if (e.u == e.v || !g.adjacent(e.u, e.v) || used.contains(e.u) || used.contains(e.v)) return false;
    used.insert(e.u);
    used.insert(e.v);
  }
  return true;
}

std::vector<Edge> duplicated_vertex_pairs(const SimpleGraph& g) {
  std::vector<Edge> out;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.neighbors(u) == g.neighbors(v)) out.emplace_back(u, v);
  return out;
}

std::optional<MultipartiteShape> multipartite_shape(const SimpleGraph& g) {
  if (g.order() == 0) return std::nullopt;
  const SimpleGraph h = complement(g);
  MultipartiteShape shape;
  for (VertexSet comp : connected_components(h)) {
    for (int v : comp)
      if (h.closed_neighbors(v) != comp) return std::nullopt;
    shape.parts.push_back(comp);
    shape.sizes.push_back(comp.size());
  }
  std::sort(shape.sizes.begin(), shape.sizes.end());
  shape.homogeneous = shape.sizes.front() == shape.sizes.back();
  return shape;
}

bool is_codi_graph(const SimpleGraph& g) { return !is_connected(complement(g)); }

SimpleGraph cycle_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return SimpleGraph::from_edges(n, es);
}

SimpleGraph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return SimpleGraph::from_edges(n, es);
}

SimpleGraph complete_graph(int n) { return complement(SimpleGraph(n)); }

SimpleGraph discrete_graph(int n) { return SimpleGraph(n); }

SimpleGraph complete_multipartite(std::span<const int> part_sizes) {
  SimpleGraph g(0);
  for (int p : part_sizes) g = join(g, SimpleGraph(p));
  return g;
}

SimpleGraph matching_graph(int r) {
  std::vector<Edge> es;
  for (int i = 0; i < r; ++i) es.emplace_back(i, r + i);
  return SimpleGraph::from_edges(2 * r, es);
}

}  // namespace coverlab
