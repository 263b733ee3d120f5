#pragma once

#include <span>
#include <string>
#include <vector>

#include "trifree/graph.hpp"

namespace trifree {

struct AuditCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct AuditReport {
  std::string subject;
  std::vector<AuditCheck> checks;

  bool overall() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Checks every hypothesis of the edge-bound proposition for (g, a, q):
// s = |a| in [n/3, n/2], a independent, the graph triangle-free,
// alpha(g - a) <= s, q inside the complement of a and the high-degree set Z
// with |q| >= 3s-n, and every independent subset of Z matchable into the
// rest. Only when all of these hold is the bound e <= n^2-4ns+5s^2 asserted
// (and recorded). Failures are report entries, never exceptions.
AuditReport prop32_audit(const Graph& g, VertexSet a, VertexSet q);

// For each extremal witness of (n, s): with n >= 2s confirms two disjoint
// independent s-sets exist, then classifies the witness as a blow-up of the
// pentagon or of the Wagner graph and checks the classification expected for
// the range of s/n.
AuditReport extremal_family_audit(std::span<const Graph> witnesses, int n, int s);

}  // namespace trifree
