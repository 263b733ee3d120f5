#pragma once

#include <string>
#include <vector>

#include "trifree/graph.hpp"

namespace trifree {

// Isomorphism-invariant encoding: equal codes iff the graphs are isomorphic.
using CanonicalCode = std::string;

struct CanonicalResult {
  CanonicalCode code;                        // graph6 of the canonical relabelling
  std::vector<int> position_to_vertex;       // a labelling achieving `code`
  std::vector<int> orbit_of;                 // automorphism orbit id per vertex
  std::vector<std::vector<int>> generators;  // automorphism generators (vertex maps)
};

// Refinement-guided permutation search for the lexicographically maximal
// adjacency string. Exact automorphism orbits fall out of the tie exploration.
CanonicalResult canonical_label(const Graph& g);

CanonicalCode canonical_form(const Graph& g);

}  // namespace trifree
