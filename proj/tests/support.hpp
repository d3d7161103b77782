#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "coverlab/enumerate.hpp"
#include "coverlab/graph.hpp"

namespace support {

// 1-indexed edges.
inline coverlab::SimpleGraph graph_of(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<coverlab::Edge> list;
  for (auto [u, v] : edges) list.emplace_back(u - 1, v - 1);
  return coverlab::SimpleGraph::from_edges(n, list);
}

inline coverlab::VertexSet set_of(std::initializer_list<int> labels) {
  coverlab::VertexSet s;
  for (int t : labels) s.insert(t - 1);
  return s;
}

inline coverlab::SimpleGraph figure1() {
  return graph_of(10, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}, {2, 4}, {1, 5}, {5, 6}, {2, 6},
                       {1, 8}, {2, 9}, {3, 7}, {4, 10}, {7, 8}, {9, 10}, {8, 9}, {3, 9}, {4, 8}});
}

inline coverlab::SimpleGraph figure2() {
  return graph_of(7, {{1, 2}, {2, 3}, {1, 3}, {2, 7}, {7, 6}, {6, 1}, {4, 5}, {3, 4}});
}

inline coverlab::SimpleGraph whiskered_c4() {
  return graph_of(8, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5}, {2, 6}, {3, 7}, {4, 8}});
}

// One graph per isomorphism class, orders lo..hi.
template <class F>
void for_each_class(int lo, int hi, F f) {
  for (int n = lo; n <= hi; ++n)
    for (const coverlab::SimpleGraph& g : coverlab::isomorphism_classes(n)) f(g);
}

}  // namespace support
