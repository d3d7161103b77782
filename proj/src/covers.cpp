#include "coverlab/covers.hpp"

#include <algorithm>

#include "coverlab/errors.hpp"

namespace coverlab {

int CoverFamily::index_of(VertexSet c) const {
  auto it = std::lower_bound(covers.begin(), covers.end(), c);
  if (it == covers.end() || *it != c) return -1;
  return static_cast<int>(it - covers.begin());
}

namespace {

// Bron-Kerbosch with pivoting on the complement graph.
class StableSetEnumerator {
 public:
  StableSetEnumerator(const SimpleGraph& g, std::size_t cap) : cap_(cap) {
    const VertexSet all = g.vertices();
    non_adj_.resize(g.order());
    for (int v = 0; v < g.order(); ++v) non_adj_[v] = all - g.closed_neighbors(v);
  }

  void run(VertexSet p) { expand(VertexSet{}, p, VertexSet{}); }
  std::vector<VertexSet>& result() { return out_; }

 private:
  void expand(VertexSet r, VertexSet p, VertexSet x) {
    if (p.empty()) {
      if (x.empty()) {
        if (out_.size() >= cap_)
          throw ResourceError("more than " + std::to_string(cap_) + " minimal vertex covers");
        out_.push_back(r);
      }
      return;
    }
    int pivot = -1;
    int best = -1;
    for (int u : p | x) {
      int k = (p & non_adj_[u]).size();
      if (k > best) {
        best = k;
        pivot = u;
      }
    }
    for (int v : p - non_adj_[pivot]) {
      expand(r.with(v), p & non_adj_[v], x & non_adj_[v]);
      p.erase(v);
      x.insert(v);
    }
  }

  std::size_t cap_;
  std::vector<VertexSet> non_adj_;
  std::vector<VertexSet> out_;
};

}  // namespace

std::vector<VertexSet> maximal_stable_sets(const SimpleGraph& g, std::size_t cap) {
  StableSetEnumerator e(g, cap);
  e.run(g.vertices());
  std::vector<VertexSet> out = std::move(e.result());
  std::sort(out.begin(), out.end());
  return out;
}

CoverFamily minimal_vertex_covers(const SimpleGraph& g, std::size_t cap) {
  CoverFamily f;
  f.n = g.order();
  const VertexSet all = g.vertices();
  for (VertexSet s : maximal_stable_sets(g, cap)) f.covers.push_back(all - s);
  std::sort(f.covers.begin(), f.covers.end());
  f.alpha0 = f.covers.front().size();
  f.bight = f.alpha0;
  for (VertexSet c : f.covers) {
    f.alpha0 = std::min(f.alpha0, c.size());
    f.bight = std::max(f.bight, c.size());
  }
  f.unmixed = f.alpha0 == f.bight;
  return f;
}

bool is_vertex_cover(const SimpleGraph& g, VertexSet s) { return g.is_vertex_cover(s); }

bool is_minimal_cover(const SimpleGraph& g, VertexSet s) {
  if (!g.is_vertex_cover(s)) return false;
  for (int v : s)
    if (g.is_vertex_cover(s.without(v))) return false;
  return true;
}

namespace {

int max_stable(const SimpleGraph& g, VertexSet p) {
  if (p.empty()) return 0;
  int lo = -1, lo_deg = 65, hi = -1, hi_deg = -1;
  for (int v : p) {
    int d = (g.neighbors(v) & p).size();
    if (d < lo_deg) lo_deg = d, lo = v;
    if (d > hi_deg) hi_deg = d, hi = v;
  }
  // A vertex of degree <= 1 lies in some maximum stable set.
  if (lo_deg <= 1) return 1 + max_stable(g, p - g.closed_neighbors(lo));
  return std::max(max_stable(g, p.without(hi)), 1 + max_stable(g, p - g.closed_neighbors(hi)));
}

}  // namespace

int independence_number(const SimpleGraph& g, VertexSet within) { return max_stable(g, within & g.vertices()); }

int covering_number(const SimpleGraph& g, VertexSet within) {
  within &= g.vertices();
  return within.size() - max_stable(g, within);
}

VertexSet blocker_neighbor_set(const CoverFamily& family, VertexSet a) {
  for (VertexSet c : family.covers)
    if (c.is_subset_of(a))
      throw PreconditionError("set " + a.to_string() + " contains the minimal cover " + c.to_string());
  VertexSet out;
  for (int t = 0; t < family.n; ++t) {
    if (a.contains(t)) continue;
    const VertexSet at = a.with(t);
    for (VertexSet c : family.covers)
      if (c.is_subset_of(at)) {
        out.insert(t);
        break;
      }
  }
  return out;
}

}  // namespace coverlab
