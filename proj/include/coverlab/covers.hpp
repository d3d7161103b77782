#pragma once

#include <cstddef>
#include <vector>

#include "coverlab/graph.hpp"

namespace coverlab {

inline constexpr std::size_t kDefaultCoverCap = std::size_t{1} << 20;

// The minimal vertex covers C_1..C_r of a graph, ascending by bitmask.
struct CoverFamily {
  int n = 0;
  std::vector<VertexSet> covers;
  int alpha0 = 0;
  int bight = 0;
  bool unmixed = true;

  int size() const { return static_cast<int>(covers.size()); }
  const VertexSet& operator[](int i) const { return covers[i]; }
  // Index of c in the family, or -1.
  int index_of(VertexSet c) const;
};

// Complements of the maximal stable sets. Throws ResourceError past `cap`.
CoverFamily minimal_vertex_covers(const SimpleGraph& g, std::size_t cap = kDefaultCoverCap);

// Maximal stable sets, ascending by bitmask.
std::vector<VertexSet> maximal_stable_sets(const SimpleGraph& g, std::size_t cap = kDefaultCoverCap);

bool is_vertex_cover(const SimpleGraph& g, VertexSet s);
bool is_minimal_cover(const SimpleGraph& g, VertexSet s);

// Size of a largest stable set of G[within].
int independence_number(const SimpleGraph& g, VertexSet within);
inline int independence_number(const SimpleGraph& g) { return independence_number(g, g.vertices()); }
// alpha_0 of G[within].
int covering_number(const SimpleGraph& g, VertexSet within);
inline int covering_number(const SimpleGraph& g) { return covering_number(g, g.vertices()); }

// N_{G^v}(A): vertices t such that A + t contains a minimal cover.
// Throws PreconditionError if A already contains one.
VertexSet blocker_neighbor_set(const CoverFamily& family, VertexSet a);

}  // namespace coverlab
