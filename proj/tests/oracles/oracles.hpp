#pragma once

// Slow reference computations that share no code with the library beyond
// SimpleGraph adjacency. Everything here works on raw bitmasks.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "coverlab/graph.hpp"

namespace oracle {

using Mask = std::uint64_t;

bool is_cover(const coverlab::SimpleGraph& g, Mask c);
bool is_stable(const coverlab::SimpleGraph& g, Mask s);

// All covers, keep the inclusion-minimal ones. Ascending.
std::vector<Mask> minimal_covers(const coverlab::SimpleGraph& g);

// Smallest vertex cover (any, not only minimal) with a swap along an edge.
int exchange_number(const coverlab::SimpleGraph& g);

// Squarefree monomial ideals as sorted lists of minimal supports.
using Ideal = std::vector<Mask>;
Ideal minimalize(std::vector<Mask> gens);
Ideal colon(const Ideal& ideal, Mask a);  // (I : t_A)

// v-numbers from the definition: least |A| with (I : t_A) an associated
// prime of I. Primes of the cover ideal are the edges, those of the edge
// ideal the minimal covers.
int v_cover_ideal(const coverlab::SimpleGraph& g);
int v_at_edge(const coverlab::SimpleGraph& g, int k, int l);
std::optional<int> v_edge_ideal(const coverlab::SimpleGraph& g);

int maximum_matching(const coverlab::SimpleGraph& g);
int perfect_matching_count(const coverlab::SimpleGraph& g);

// Restricted connectivity on raw covers: for every pair, a path of covers
// inside their union with consecutive covers meeting in alpha0 - 1 vertices.
bool linearly_presented(const coverlab::SimpleGraph& g);
int cover_graph_components(const coverlab::SimpleGraph& g);

// Rank over Z/p for a large prime p.
int rank_mod_p(std::vector<std::vector<std::int64_t>> a);

// Polynomials in t as exponent-vector -> coefficient.
using Poly = std::map<std::vector<int>, std::int64_t>;
// Leibniz expansion of a square matrix whose entries are c * t_var (var -1 for
// constants). Small sizes only.
struct Entry {
  int coeff = 0;
  int var = -1;
};
Poly leibniz_determinant(const std::vector<std::vector<Entry>>& m, int vars);

// Minimum adjacency string over all permutations.
std::uint64_t brute_canonical(const coverlab::SimpleGraph& g);

}  // namespace oracle
