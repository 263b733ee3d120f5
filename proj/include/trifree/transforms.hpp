#pragma once

#include "trifree/graph.hpp"
#include "trifree/solvers.hpp"

namespace trifree {

// Generalised Zykov symmetrisation Sym(A, B): delete every edge meeting B,
// then add all A-B edges. A and B must be disjoint.
Graph sym(const Graph& g, VertexSet a, VertexSet b);

// Deletes all edges incident with the vertices of `a` missed by `m`.
// Requires a independent of maximum size and m a maximum matching from the
// rest of the graph into a; the independence number is then preserved.
Graph isolate_unmatched(const Graph& g, VertexSet a, const Matching& m);

// Two disjoint independent s-sets A, B completely joined from B' in A and
// A' in B; the outcome of symmetrising an extremal graph.
struct PairStructure {
  Graph graph;
  VertexSet a = 0, b = 0;
  VertexSet a_prime = 0;  // subset of b, joined to all of a
  VertexSet b_prime = 0;  // subset of a, joined to all of b
};

// Picks the lexicographically least disjoint independent s-sets, takes
// maximum matchings from the rest into each, and symmetrises twice. Keeps
// the graph triangle-free, the independence number at s, and never loses
// edges. Throws if no two disjoint independent s-sets exist.
PairStructure enforce_pair_structure(const Graph& g, int s);

struct TripleStructure {
  Graph graph;
  VertexSet a = 0, b = 0, c = 0;
  VertexSet a_prime = 0;  // subset of b and c, joined to all of a
  VertexSet b_prime = 0;  // subset of a, joined to all of b
  VertexSet c_prime = 0;  // subset of a minus b_prime, joined to all of c
};

// Three-stage pipeline on independent s-sets a, b, c with a disjoint from
// b and c and |b and c| <= n-2s: symmetrise against b, then c (with a
// matching saturating b_prime), then a. Same preservation guarantees.
TripleStructure enforce_triple_structure(const Graph& g, VertexSet a, VertexSet b, VertexSet c);

}  // namespace trifree
