#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "trifree/graph.hpp"

namespace trifree {

// Deterministic instance source for the randomized suites.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t raw() { return eng_(); }
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(eng_() % static_cast<std::uint64_t>(n)); }
  bool chance(int percent) { return below(100) < percent; }

 private:
  std::mt19937_64 eng_;
};

Graph random_graph(Rng& rng, int n, int edge_percent);
Graph random_triangle_free(Rng& rng, int n, int edge_percent);
VertexSet random_subset(Rng& rng, VertexSet pool, int keep_percent);
VertexSet random_subset_of_size(Rng& rng, VertexSet pool, int size);
// Greedy independent set over a shuffled vertex order, restricted to pool.
VertexSet random_maximal_independent(Rng& rng, const Graph& g, VertexSet pool);
// Uniform-ish choice among maximum independent sets (capped enumeration).
VertexSet random_maximum_independent_set(Rng& rng, const Graph& g);

struct SuiteResult {
  std::string name;
  int instances = 0;
  int violations = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> failures;  // first few diagnostics only
};

// Symmetrisation never loses edges when |A| bounds the degrees in B, with
// the equality characterization.
SuiteResult run_sym_edge_count_suite(std::uint64_t seed, int instances);
// Symmetrisation against an independent set keeps triangle-free graphs
// triangle-free.
SuiteResult run_sym_triangle_free_suite(std::uint64_t seed, int instances);
// Isolating the unmatched part of a maximum independent set preserves the
// independence number.
SuiteResult run_isolate_alpha_suite(std::uint64_t seed, int instances);
// Symmetrising onto the unmatched part of a second maximum independent set
// preserves the independence number.
SuiteResult run_sym_alpha_suite(std::uint64_t seed, int instances);
// Any independent set disjoint from a maximum one is matchable into it.
SuiteResult run_matchable_suite(std::uint64_t seed, int instances);
// A matchable subset of one side can always be saturated by some maximum
// matching.
SuiteResult run_saturating_matching_suite(std::uint64_t seed, int instances);

std::vector<SuiteResult> run_all_property_suites(std::uint64_t seed, int instances);

}  // namespace trifree
