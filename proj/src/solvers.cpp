#include "trifree/solvers.hpp"

#include <algorithm>
#include <stdexcept>

namespace trifree {

namespace {

// Partition `pool` into cliques greedily; the number of parts bounds the
// independence number of the induced subgraph from above.
int clique_cover_bound(const Graph& g, VertexSet pool) {
  int parts = 0;
  while (pool) {
    int v = set_first(pool);
    pool = set_without(pool, v);
    VertexSet extend = pool & g.row(v);  // candidates adjacent to the whole clique so far
    while (extend) {
      int u = set_first(extend);
      pool = set_without(pool, u);
      extend = set_without(extend, u) & g.row(u);
    }
    ++parts;
  }
  return parts;
}

struct MisState {
  const Graph& g;
  int best = 0;
  VertexSet best_set = 0;
  int target = -1;  // stop early once an independent set of this size is found

  bool done() const { return target >= 0 && best >= target; }

  void search(VertexSet pool, int chosen, VertexSet chosen_set) {
    if (chosen > best) {
      best = chosen;
      best_set = chosen_set;
    }
    if (done() || !pool) return;
    if (chosen + clique_cover_bound(g, pool) <= best) return;

    // branch on a vertex of maximum degree within the pool, lowest index first
    int branch = -1, bdeg = -1;
    for_set_bits(pool, [&](int v) {
      int d = set_size(g.row(v) & pool);
      if (d > bdeg) {
        bdeg = d;
        branch = v;
      }
    });
    VertexSet without_closed = set_without(pool, branch) & ~g.row(branch);
    search(without_closed, chosen + 1, set_with(chosen_set, branch));
    if (done()) return;
    search(set_without(pool, branch), chosen, chosen_set);
  }
};

}  // namespace

int independence_number(const Graph& g) {
  return independence_number_within(g, g.vertices());
}

VertexSet maximum_independent_set(const Graph& g) {
  MisState st{g};
  st.search(g.vertices(), 0, 0);
  return st.best_set;
}

int independence_number_within(const Graph& g, VertexSet allowed) {
  MisState st{g};
  st.search(allowed & g.vertices(), 0, 0);
  return st.best;
}

bool has_independent_set(const Graph& g, VertexSet allowed, int target) {
  if (target <= 0) return true;
  MisState st{g};
  st.target = target;
  st.search(allowed & g.vertices(), 0, 0);
  return st.best >= target;
}

namespace {

// Colex generation: largest member chosen in the outer loop, so results come
// out in ascending bitmask order.
void colex_independent(const Graph& g, VertexSet allowed, int size, VertexSet acc,
                       std::vector<VertexSet>& out, std::size_t limit) {
  if (size == 0) {
    out.push_back(acc);
    return;
  }
  for_set_bits(allowed, [&](int m) {
    if (out.size() >= limit) return;
    VertexSet below = (VertexSet{1} << m) - 1;
    colex_independent(g, allowed & below & ~g.row(m), size - 1, set_with(acc, m), out, limit);
  });
}

}  // namespace

std::vector<VertexSet> independent_sets_of_size(const Graph& g, int size, std::size_t limit) {
  if (size < 0 || size > g.order()) throw std::invalid_argument("set size out of range");
  std::vector<VertexSet> out;
  colex_independent(g, g.vertices(), size, 0, out, limit);
  if (out.size() > limit) out.resize(limit);
  return out;
}

VertexSet Matching::covered_r() const {
  VertexSet c = 0;
  for (auto [a, b] : pairs) c = set_with(c, a);
  return c;
}

VertexSet Matching::covered_s() const {
  VertexSet c = 0;
  for (auto [a, b] : pairs) c = set_with(c, b);
  return c;
}

void check_matching(const Graph& g, const Matching& m) {
  if (m.r_side & m.s_side) throw std::invalid_argument("matching sides overlap");
  VertexSet seen = 0;
  for (auto [a, b] : m.pairs) {
    if (!set_contains(m.r_side, a) || !set_contains(m.s_side, b))
      throw std::invalid_argument("matching pair outside declared sides");
    if (!g.has_edge(a, b)) throw std::invalid_argument("matching pair is not an edge");
    VertexSet both = set_with(set_with(VertexSet{0}, a), b);
    if (seen & both) throw std::invalid_argument("matching pairs share a vertex");
    seen |= both;
  }
}

namespace {

// One augmenting-path pass from r-vertex `v` (Kuhn's algorithm).
bool augment(const Graph& g, VertexSet s, int v, std::vector<int>& match_of_s,
             VertexSet& visited_s) {
  bool found = false;
  for_set_bits(g.row(v) & s & ~visited_s, [&](int u) {
    if (found) return;
    visited_s = set_with(visited_s, u);
    int w = match_of_s[static_cast<std::size_t>(u)];
    if (w < 0 || augment(g, s, w, match_of_s, visited_s)) {
      match_of_s[static_cast<std::size_t>(u)] = v;
      found = true;
    }
  });
  return found;
}

Matching matching_from_table(VertexSet r, VertexSet s, const std::vector<int>& match_of_s) {
  Matching m;
  m.r_side = r;
  m.s_side = s;
  for_set_bits(s, [&](int u) {
    int v = match_of_s[static_cast<std::size_t>(u)];
    if (v >= 0) m.pairs.emplace_back(v, u);
  });
  // deterministic order: by r vertex index
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

}  // namespace

Matching max_bipartite_matching(const Graph& g, VertexSet r, VertexSet s) {
  if (r & s) throw std::invalid_argument("matching sides must be disjoint");
  std::vector<int> match_of_s(static_cast<std::size_t>(g.order()), -1);
  for_set_bits(r, [&](int v) {
    VertexSet visited = 0;
    augment(g, s, v, match_of_s, visited);
  });
  return matching_from_table(r, s, match_of_s);
}

bool is_matchable(const Graph& g, VertexSet y, VertexSet a) {
  if (y & a) throw std::invalid_argument("sets must be disjoint");
  return max_bipartite_matching(g, y, a).size() == set_size(y);
}

std::optional<Matching> saturating_max_matching(const Graph& g, VertexSet r, VertexSet s,
                                                VertexSet r_prime) {
  if (r & s) throw std::invalid_argument("matching sides must be disjoint");
  if (r_prime & ~r) throw std::invalid_argument("r_prime must be a subset of r");
  std::vector<int> match_of_s(static_cast<std::size_t>(g.order()), -1);
  int matched_prime = 0;
  for_set_bits(r_prime, [&](int v) {
    VertexSet visited = 0;
    if (augment(g, s, v, match_of_s, visited)) ++matched_prime;
  });
  if (matched_prime < set_size(r_prime)) return std::nullopt;
  // Augmenting never unmatches an already matched r-vertex, so r_prime stays
  // saturated while the matching grows to maximum size.
  for_set_bits(r & ~r_prime, [&](int v) {
    VertexSet visited = 0;
    augment(g, s, v, match_of_s, visited);
  });
  return matching_from_table(r, s, match_of_s);
}

}  // namespace trifree
