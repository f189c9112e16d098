#pragma once

#include <array>
#include <string>
#include <vector>

namespace ocgw {

// Stable graph without heights: vertex genera, edges (loops and multi-edges allowed),
// labeled open leaves, and per-vertex counts of primary and dilaton leaves.
struct CoreGraph {
  std::vector<int> genus;
  std::vector<std::array<int, 2>> edges;  // endpoints, [0] <= [1]
  std::vector<int> open_at;               // open leaf j sits at vertex open_at[j]
  std::vector<int> prim;
  std::vector<int> dil;

  int vertices() const { return static_cast<int>(genus.size()); }
  int total_genus() const;
  int valence(int v) const;
  int dim(int v) const { return 3 * genus[v] - 3 + valence(v); }
  std::vector<int> canonical_key() const;
};

struct DecoratedGraph {
  CoreGraph core;
  std::vector<std::array<int, 2>> edge_heights;  // heights at edges[e][0], edges[e][1]
  std::vector<int> open_heights;
  std::vector<std::vector<int>> prim_heights;  // per vertex, non-increasing
  std::vector<std::vector<int>> dil_heights;   // per vertex, non-increasing, each >= 2
  std::vector<int> alpha;                      // empty unless markings were requested
  long long aut = 1;

  // heights of every insertion at v (half-edges, open, primary, dilaton)
  std::vector<int> vertex_heights(int v) const;
  int max_height() const;
  std::string describe() const;
};

// All stable decorated graphs of genus g with n open and l primary leaves and any number of
// dilaton leaves whose vertex dimension constraints admit a solution, one per isomorphism class.
// With order > 0 every vertex also carries a marking alpha in [0, order).
std::vector<DecoratedGraph> enumerate_graphs(int g, int n, int l, int order = 0);

// Core shapes reachable from the one-vertex graph by degeneration, deduplicated.
std::vector<CoreGraph> enumerate_shapes(int g, int n, int l, int dilatons);

// Brute-force automorphism count over vertex permutations and flag bijections.
long long naive_aut(const DecoratedGraph& gr);

}  // namespace ocgw
