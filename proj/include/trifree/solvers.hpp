#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "trifree/graph.hpp"

namespace trifree {

// Exact maximum independent set size, branch and bound with a greedy
// clique-cover bound. Deterministic (ties by lowest vertex index).
int independence_number(const Graph& g);
VertexSet maximum_independent_set(const Graph& g);

// Same, restricted to an induced vertex subset.
int independence_number_within(const Graph& g, VertexSet allowed);
bool has_independent_set(const Graph& g, VertexSet allowed, int target);

// All independent sets of the given size, in ascending bitmask order
// (colexicographic on member lists), truncated at `limit`.
std::vector<VertexSet> independent_sets_of_size(
    const Graph& g, int size, std::size_t limit = std::numeric_limits<std::size_t>::max());

// Matching between two declared disjoint vertex sets; every pair is an edge
// of the owning graph, first component on the r side.
struct Matching {
  VertexSet r_side = 0;
  VertexSet s_side = 0;
  std::vector<std::pair<int, int>> pairs;

  int size() const { return static_cast<int>(pairs.size()); }
  VertexSet covered_r() const;
  VertexSet covered_s() const;
  VertexSet covered() const { return covered_r() | covered_s(); }
  bool saturates(VertexSet vs) const { return (vs & ~covered()) == 0; }
};

// Maximum-cardinality matching using only r-s edges (augmenting paths,
// vertices scanned in index order).
Matching max_bipartite_matching(const Graph& g, VertexSet r, VertexSet s);

// Hall's condition for y into a, decided by matching size.
bool is_matchable(const Graph& g, VertexSet y, VertexSet a);

// Maximum matching between r and s saturating all of r_prime, when r_prime
// is matchable into s; built by augmenting from a matching of r_prime
// (augmenting paths keep matched vertices matched).
std::optional<Matching> saturating_max_matching(const Graph& g, VertexSet r, VertexSet s,
                                                VertexSet r_prime);

// Validates that m is a matching of g between r and s; throws otherwise.
void check_matching(const Graph& g, const Matching& m);

}  // namespace trifree
