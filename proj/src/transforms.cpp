#include "trifree/transforms.hpp"

#include <stdexcept>

namespace trifree {

Graph sym(const Graph& g, VertexSet a, VertexSet b) {
  if (a & b) throw std::invalid_argument("sym requires disjoint sets");
  if ((a | b) & ~g.vertices()) throw std::invalid_argument("set not a subset of vertices");
  int n = g.order();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::uint64_t r = g.row(v);
    if (set_contains(b, v))
      r = a;  // all old edges dropped, joined to exactly a (plus re-added below)
    else
      r &= ~b;
    rows[static_cast<std::size_t>(v)] = r;
  }
  for_set_bits(a, [&](int v) { rows[static_cast<std::size_t>(v)] |= b; });
  return Graph::from_rows(std::move(rows));
}

Graph isolate_unmatched(const Graph& g, VertexSet a, const Matching& m) {
  if (!g.is_independent(a)) throw std::invalid_argument("a must be independent");
  if (set_size(a) != independence_number(g))
    throw std::invalid_argument("a must be a maximum independent set");
  check_matching(g, m);
  VertexSet rest = g.vertices() & ~a;
  if (m.r_side != rest || m.s_side != a)
    throw std::invalid_argument("matching must go from the rest of the graph into a");
  if (m.size() != max_bipartite_matching(g, rest, a).size())
    throw std::invalid_argument("matching must have maximum size");

  VertexSet unmatched = a & ~m.covered_s();
  int n = g.order();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    rows[static_cast<std::size_t>(v)] =
        set_contains(unmatched, v) ? 0 : g.row(v) & ~unmatched;
  return Graph::from_rows(std::move(rows));
}

namespace {

VertexSet least_subset(VertexSet pool, int size) {
  VertexSet out = 0;
  for_set_bits(pool, [&](int v) {
    if (set_size(out) < size) out = set_with(out, v);
  });
  if (set_size(out) < size) throw std::logic_error("pool smaller than requested subset");
  return out;
}

void require_independent_s_set(const Graph& g, VertexSet x, int s, const char* name) {
  if (set_size(x) != s) throw std::invalid_argument(std::string(name) + " must have size s");
  if (!g.is_independent(x)) throw std::invalid_argument(std::string(name) + " must be independent");
}

}  // namespace

PairStructure enforce_pair_structure(const Graph& g, int s) {
  if (!is_triangle_free(g)) throw std::invalid_argument("graph must be triangle-free");
  if (independence_number(g) != s)
    throw std::invalid_argument("independence number must equal s");

  // lexicographically least A admitting a disjoint independent s-set, then
  // the least such B
  VertexSet a = 0, b = 0;
  bool found = false;
  for (VertexSet cand : independent_sets_of_size(g, s)) {
    if (!has_independent_set(g, g.vertices() & ~cand, s)) continue;
    a = cand;
    for (VertexSet candb : independent_sets_of_size(g, s)) {
      if (candb & a) continue;
      b = candb;
      break;
    }
    found = true;
    break;
  }
  if (!found) throw std::invalid_argument("no two disjoint independent s-sets exist");

  int n = g.order();
  int prime_size = std::max(0, 3 * s - n);
  VertexSet x = g.vertices() & ~(a | b);
  Matching m_a = max_bipartite_matching(g, x, a);
  Matching m_b = max_bipartite_matching(g, x, b);
  VertexSet a_star = b & ~m_b.covered_s();
  VertexSet b_star = a & ~m_a.covered_s();
  VertexSet a_prime = least_subset(a_star, prime_size);
  VertexSet b_prime = least_subset(b_star, prime_size);

  Graph g1 = sym(g, a, a_prime);
  Graph g2 = sym(g1, b, b_prime);

  PairStructure out{std::move(g2), a, b, a_prime, b_prime};
  return out;
}

TripleStructure enforce_triple_structure(const Graph& g, VertexSet a, VertexSet b, VertexSet c) {
  if (!is_triangle_free(g)) throw std::invalid_argument("graph must be triangle-free");
  int s = set_size(a);
  if (independence_number(g) != s)
    throw std::invalid_argument("independence number must equal |a|");
  require_independent_s_set(g, a, s, "a");
  require_independent_s_set(g, b, s, "b");
  require_independent_s_set(g, c, s, "c");
  if ((a & b) || (a & c)) throw std::invalid_argument("a must be disjoint from b and c");
  int n = g.order();
  if (set_size(b & c) > n - 2 * s)
    throw std::invalid_argument("|b intersect c| must not exceed n-2s");
  int prime_size = std::max(0, 3 * s - n);

  // 1: symmetrise b against the part of a missed by a maximum matching of a
  Matching m_b = max_bipartite_matching(g, g.vertices() & ~(a | b), a);
  VertexSet b_pool = a & ~m_b.covered_s();
  VertexSet b_prime = least_subset(b_pool, prime_size);
  Graph g1 = sym(g, b, b_pool);

  // 2: like 1 for c, with the matching forced to saturate b_prime
  auto m_c = saturating_max_matching(g1, a, g1.vertices() & ~(a | c), b_prime);
  if (!m_c) throw std::logic_error("b_prime not matchable although joined to all of b");
  VertexSet c_pool = a & ~m_c->covered_r();
  VertexSet c_prime = least_subset(c_pool, prime_size);
  Graph g2 = sym(g1, c, c_pool);

  // 3: symmetrise a against the part of b missed by a maximum matching of b
  Matching m_a = max_bipartite_matching(g2, g2.vertices() & ~(a | b), b);
  VertexSet a_pool = b & ~m_a.covered_s();
  VertexSet a_prime = least_subset(a_pool, prime_size);
  Graph g3 = sym(g2, a, a_pool);

  if (b_prime & c_prime) throw std::logic_error("b_prime and c_prime overlap");
  if (a_prime & ~c) throw std::logic_error("a_prime escaped c");

  TripleStructure out{std::move(g3), a, b, c, a_prime, b_prime, c_prime};
  return out;
}

}  // namespace trifree
