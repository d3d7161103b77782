#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "coverlab/graph.hpp"

namespace coverlab {

// Graphs up to this order have a canonical code (upper triangle fits in 64 bits).
inline constexpr int kMaxCanonicalOrder = 11;
inline constexpr int kMaxLabeledOrder = 10;
inline constexpr int kMaxDedupOrder = 9;

// Upper-triangle adjacency bits of the relabeling that minimizes them over the
// leaves of an individualization-refinement search. Equal iff isomorphic.
std::uint64_t canonical_code(const SimpleGraph& g);
SimpleGraph canonical_form(const SimpleGraph& g);
bool isomorphic(const SimpleGraph& a, const SimpleGraph& b);

// One canonical representative per isomorphism class, ascending by code.
// Cached; thread-safe.
const std::vector<SimpleGraph>& isomorphism_classes(int n);

struct GraphEnumeration {
  int n = 0;
  bool unmixed_only = false;
  bool konig_only = false;
  bool bipartite_only = false;
  bool no_isolated = false;
  bool dedup_isomorphic = false;
};

// Labeled graphs are the edge subsets of K_n in increasing mask order, edges
// numbered lexicographically. Throws ResourceError past the order caps.
void enumerate_graphs(const GraphEnumeration& spec, const std::function<void(const SimpleGraph&)>& visit);
std::vector<SimpleGraph> enumerate_graphs(const GraphEnumeration& spec);

}  // namespace coverlab
