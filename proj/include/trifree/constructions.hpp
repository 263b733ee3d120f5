#pragma once

#include <optional>
#include <span>
#include <vector>

#include "trifree/graph.hpp"

namespace trifree {

// Cayley graph on Z/(3k-1)Z with connection set {k, ..., 2k-1}: k-regular,
// triangle-free, independence number exactly k. Vertices are the residues.
Graph andrasfai(int k);

// A template graph plus one nonnegative class size per template vertex.
struct BlowupWeights {
  Graph pattern;
  std::vector<int> weights;
};

// Replace vertex i of the pattern by an independent class of weights[i]
// vertices (classes laid out consecutively in pattern order) and join two
// classes completely whenever the pattern vertices are adjacent.
Graph blow_up(const Graph& pattern, std::span<const int> weights);
Graph blow_up(const BlowupWeights& spec);

struct ExtremalBlowup {
  Graph graph;
  int k = 0;
  std::vector<int> weights;
};

// For n/3 < s < n/2: the Andrasfai blow-up with classes of size
// (k-1)n-(3k-4)s on vertices 1, k, 2k and 3s-n elsewhere, which attains
// order n, independence number s and g_k(n,s) edges.
ExtremalBlowup extremal_blowup(int n, int s);

struct TwinContraction {
  Graph contracted;
  std::vector<std::vector<int>> classes;  // original vertices per contracted vertex
};

// Repeatedly merges the lexicographically least pair of vertices with equal
// open neighbourhoods; inverts blow-ups on twin-free templates.
TwinContraction twin_contraction(const Graph& g);

// Weights w with blow_up(pattern, w) isomorphic to g, if any: contract g,
// then embed the contraction into the pattern as an induced subgraph.
std::optional<std::vector<int>> is_blowup_of(const Graph& g, const Graph& pattern);

}  // namespace trifree
