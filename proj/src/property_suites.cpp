#include "trifree/property_suites.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "trifree/graph6.hpp"
#include "trifree/solvers.hpp"
#include "trifree/transforms.hpp"

namespace trifree {

namespace {

std::vector<int> shuffled_vertices(Rng& rng, int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(rng.below(i + 1))]);
  return order;
}

void note_failure(SuiteResult& res, const Graph& g, const std::string& what) {
  ++res.violations;
  if (res.failures.size() < 5)
    res.failures.push_back(what + " on " + encode_graph6(g));
}

}  // namespace

Graph random_graph(Rng& rng, int n, int edge_percent) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(edge_percent)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph random_triangle_free(Rng& rng, int n, int edge_percent) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  for (std::size_t i = pairs.size(); i > 1; --i)
    std::swap(pairs[i - 1], pairs[static_cast<std::size_t>(rng.below(static_cast<int>(i)))]);

  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : pairs) {
    if (!rng.chance(edge_percent)) continue;
    if (rows[static_cast<std::size_t>(u)] & rows[static_cast<std::size_t>(v)]) continue;  // would close a triangle
    rows[static_cast<std::size_t>(u)] |= VertexSet{1} << v;
    rows[static_cast<std::size_t>(v)] |= VertexSet{1} << u;
  }
  return Graph::from_rows(std::move(rows));
}

VertexSet random_subset(Rng& rng, VertexSet pool, int keep_percent) {
  VertexSet out = 0;
  for_set_bits(pool, [&](int v) {
    if (rng.chance(keep_percent)) out = set_with(out, v);
  });
  return out;
}

VertexSet random_subset_of_size(Rng& rng, VertexSet pool, int size) {
  std::vector<int> members = set_members(pool);
  for (int i = static_cast<int>(members.size()) - 1; i > 0; --i)
    std::swap(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(rng.below(i + 1))]);
  VertexSet out = 0;
  for (int i = 0; i < size && i < static_cast<int>(members.size()); ++i)
    out = set_with(out, members[static_cast<std::size_t>(i)]);
  return out;
}

VertexSet random_maximal_independent(Rng& rng, const Graph& g, VertexSet pool) {
  VertexSet out = 0;
  for (int v : shuffled_vertices(rng, g.order())) {
    if (!set_contains(pool, v)) continue;
    if (g.row(v) & out) continue;
    out = set_with(out, v);
  }
  return out;
}

VertexSet random_maximum_independent_set(Rng& rng, const Graph& g) {
  int alpha = independence_number(g);
  auto all = independent_sets_of_size(g, alpha, 512);
  return all[static_cast<std::size_t>(rng.below(static_cast<int>(all.size())))];
}

SuiteResult run_sym_edge_count_suite(std::uint64_t seed, int instances) {
  SuiteResult res{"sym_edge_count", 0, 0, seed, {}};
  Rng rng(seed);
  while (res.instances < instances) {
    int n = 3 + rng.below(10);
    Graph g = random_graph(rng, n, 15 + rng.below(60));
    VertexSet b = random_subset_of_size(rng, g.vertices(), 1 + rng.below(std::max(1, n / 2)));
    int dmax = 0;
    for_set_bits(b, [&](int v) { dmax = std::max(dmax, g.degree(v)); });
    VertexSet rest = g.vertices() & ~b;
    if (set_size(rest) < dmax) continue;  // hypothesis |A| >= deg(b) unreachable
    int asize = dmax + rng.below(set_size(rest) - dmax + 1);
    VertexSet a = random_subset_of_size(rng, rest, asize);
    ++res.instances;

    Graph h = sym(g, a, b);
    if (h.edge_count() < g.edge_count()) {
      note_failure(res, g, "edge count dropped");
      continue;
    }
    if (h.edge_count() == g.edge_count()) {
      bool degrees_ok = true;
      for_set_bits(b, [&](int v) { degrees_ok = degrees_ok && g.degree(v) == set_size(a); });
      if (!degrees_ok || !g.is_independent(b))
        note_failure(res, g, "equality without the forced structure");
    }
  }
  return res;
}

SuiteResult run_sym_triangle_free_suite(std::uint64_t seed, int instances) {
  SuiteResult res{"sym_triangle_free", 0, 0, seed, {}};
  Rng rng(seed);
  while (res.instances < instances) {
    int n = 3 + rng.below(10);
    Graph g = random_triangle_free(rng, n, 20 + rng.below(70));
    VertexSet a = random_subset(rng, random_maximal_independent(rng, g, g.vertices()), 70);
    VertexSet b = random_subset(rng, g.vertices() & ~a, 40);
    ++res.instances;
    if (!is_triangle_free(sym(g, a, b))) note_failure(res, g, "triangle introduced");
  }
  return res;
}

SuiteResult run_isolate_alpha_suite(std::uint64_t seed, int instances) {
  SuiteResult res{"isolate_alpha", 0, 0, seed, {}};
  Rng rng(seed);
  while (res.instances < instances) {
    int n = 2 + rng.below(11);
    Graph g = random_triangle_free(rng, n, 20 + rng.below(60));
    VertexSet a = random_maximum_independent_set(rng, g);
    Matching m = max_bipartite_matching(g, g.vertices() & ~a, a);
    ++res.instances;
    Graph h = isolate_unmatched(g, a, m);
    if (independence_number(h) != set_size(a)) note_failure(res, g, "alpha changed");
  }
  return res;
}

SuiteResult run_sym_alpha_suite(std::uint64_t seed, int instances) {
  SuiteResult res{"sym_alpha", 0, 0, seed, {}};
  Rng rng(seed);
  while (res.instances < instances) {
    int n = 4 + rng.below(9);
    Graph g = random_graph(rng, n, 25 + rng.below(50));
    int alpha = independence_number(g);
    if (2 * alpha > n) continue;
    auto sets = independent_sets_of_size(g, alpha, 256);
    VertexSet a = 0, b = 0;
    bool found = false;
    int start = rng.below(static_cast<int>(sets.size()));
    for (std::size_t i = 0; i < sets.size() && !found; ++i) {
      VertexSet ca = sets[(static_cast<std::size_t>(start) + i) % sets.size()];
      for (VertexSet cb : sets)
        if (!(ca & cb)) {
          a = ca;
          b = cb;
          found = true;
          break;
        }
    }
    if (!found) continue;
    ++res.instances;
    Matching m = max_bipartite_matching(g, g.vertices() & ~(a | b), b);
    VertexSet b_prime = random_subset(rng, b & ~m.covered_s(), 60);
    Graph h = sym(g, a, b_prime);
    if (independence_number(h) != alpha) note_failure(res, g, "alpha changed");
  }
  return res;
}

SuiteResult run_matchable_suite(std::uint64_t seed, int instances) {
  SuiteResult res{"matchable_into_maximum", 0, 0, seed, {}};
  Rng rng(seed);
  while (res.instances < instances) {
    int n = 3 + rng.below(11);
    Graph g = rng.chance(50) ? random_triangle_free(rng, n, 20 + rng.below(60))
                             : random_graph(rng, n, 20 + rng.below(60));
    VertexSet a = random_maximum_independent_set(rng, g);
    VertexSet y = random_subset(rng, random_maximal_independent(rng, g, g.vertices() & ~a), 75);
    ++res.instances;
    if (!is_matchable(g, y, a)) note_failure(res, g, "independent set not matchable");
  }
  return res;
}

SuiteResult run_saturating_matching_suite(std::uint64_t seed, int instances) {
  SuiteResult res{"saturating_maximum_matching", 0, 0, seed, {}};
  Rng rng(seed);
  while (res.instances < instances) {
    int n = 4 + rng.below(11);
    Graph g = random_graph(rng, n, 20 + rng.below(60));
    VertexSet r = random_subset_of_size(rng, g.vertices(), 1 + rng.below(n - 1));
    VertexSet s = random_subset(rng, g.vertices() & ~r, 70);
    Matching best = max_bipartite_matching(g, r, s);
    VertexSet r_prime = random_subset(rng, best.covered_r(), 70);
    ++res.instances;
    auto m = saturating_max_matching(g, r, s, r_prime);
    if (!m) {
      note_failure(res, g, "saturating matching missing");
      continue;
    }
    check_matching(g, *m);
    if (m->size() != best.size()) note_failure(res, g, "not maximum");
    if (!m->saturates(r_prime)) note_failure(res, g, "r_prime not saturated");
  }
  return res;
}

std::vector<SuiteResult> run_all_property_suites(std::uint64_t seed, int instances) {
  return {
      run_sym_edge_count_suite(seed, instances),
      run_sym_triangle_free_suite(seed + 1, instances),
      run_isolate_alpha_suite(seed + 2, instances),
      run_sym_alpha_suite(seed + 3, instances),
      run_matchable_suite(seed + 4, instances),
      run_saturating_matching_suite(seed + 5, instances),
  };
}

}  // namespace trifree
