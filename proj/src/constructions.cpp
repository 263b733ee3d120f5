#include "trifree/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "trifree/canonical.hpp"
#include "trifree/formulas.hpp"

namespace trifree {

Graph andrasfai(int k) {
  if (k < 1) throw std::invalid_argument("andrasfai requires k >= 1");
  int n = 3 * k - 1;
  if (n > Graph::max_order) throw std::invalid_argument("andrasfai graph exceeds supported order");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int d = (j - i) % n;
      if (d >= k && d <= 2 * k - 1) edges.emplace_back(i, j);
    }
  return Graph(n, edges);
}

Graph blow_up(const Graph& pattern, std::span<const int> weights) {
  if (static_cast<int>(weights.size()) != pattern.order())
    throw std::invalid_argument("one weight per template vertex required");
  long long total = 0;
  for (int w : weights) {
    if (w < 0) throw std::invalid_argument("weights must be nonnegative");
    total += w;
  }
  if (total > Graph::max_order) throw std::invalid_argument("blow-up exceeds supported order");

  std::vector<int> offset(weights.size() + 1, 0);
  for (std::size_t i = 0; i < weights.size(); ++i)
    offset[i + 1] = offset[i] + weights[i];

  std::vector<std::pair<int, int>> edges;
  for (auto [i, j] : pattern.edges())
    for (int a = offset[static_cast<std::size_t>(i)]; a < offset[static_cast<std::size_t>(i) + 1]; ++a)
      for (int b = offset[static_cast<std::size_t>(j)]; b < offset[static_cast<std::size_t>(j) + 1]; ++b)
        edges.emplace_back(a, b);
  return Graph(static_cast<int>(total), edges);
}

Graph blow_up(const BlowupWeights& spec) { return blow_up(spec.pattern, spec.weights); }

ExtremalBlowup extremal_blowup(int n, int s) {
  if (!(3 * s > n && 2 * s < n))
    throw std::invalid_argument("extremal_blowup requires n/3 < s < n/2");
  RangeIndex r = range_index(n, s);
  int k = r.k;
  ExtremalBlowup out;
  out.k = k;
  out.weights.assign(static_cast<std::size_t>(3 * k - 1), 3 * s - n);
  int heavy = (k - 1) * n - (3 * k - 4) * s;
  for (int v : {1, k, 2 * k}) out.weights[static_cast<std::size_t>(v)] = heavy;
  out.graph = blow_up(andrasfai(k), out.weights);
  return out;
}

TwinContraction twin_contraction(const Graph& g) {
  TwinContraction out;
  Graph cur = g;
  out.classes.resize(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) out.classes[static_cast<std::size_t>(v)] = {v};

  for (;;) {
    int n = cur.order();
    int mi = -1, mj = -1;
    for (int i = 0; i < n && mi < 0; ++i)
      for (int j = i + 1; j < n; ++j)
        if (cur.row(i) == cur.row(j)) {
          mi = i;
          mj = j;
          break;
        }
    if (mi < 0) break;
    // absorb mj into mi, drop mj
    out.classes[static_cast<std::size_t>(mi)].insert(out.classes[static_cast<std::size_t>(mi)].end(),
                                                     out.classes[static_cast<std::size_t>(mj)].begin(),
                                                     out.classes[static_cast<std::size_t>(mj)].end());
    out.classes.erase(out.classes.begin() + mj);
    cur = induced_subgraph(cur, set_without(cur.vertices(), mj));
  }
  for (auto& cls : out.classes) std::sort(cls.begin(), cls.end());
  out.contracted = cur;
  return out;
}

namespace {

// Backtracking search for an induced embedding of h into pattern; vertices of
// h are mapped in index order, candidates tried ascending.
bool embed(const Graph& h, const Graph& pattern, int next, VertexSet used, std::vector<int>& map) {
  if (next == h.order()) return true;
  for (int c = 0; c < pattern.order(); ++c) {
    if (set_contains(used, c)) continue;
    bool ok = true;
    for (int q = 0; q < next && ok; ++q)
      ok = h.has_edge(q, next) == pattern.has_edge(map[static_cast<std::size_t>(q)], c);
    if (!ok) continue;
    map[static_cast<std::size_t>(next)] = c;
    if (embed(h, pattern, next + 1, set_with(used, c), map)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> is_blowup_of(const Graph& g, const Graph& pattern) {
  if (pattern.order() > 16) throw std::invalid_argument("pattern order capped at 16");
  TwinContraction tc = twin_contraction(g);
  const Graph& h = tc.contracted;
  if (h.order() > pattern.order()) return std::nullopt;

  std::vector<int> map(static_cast<std::size_t>(h.order()), -1);
  if (!embed(h, pattern, 0, 0, map)) return std::nullopt;

  std::vector<int> weights(static_cast<std::size_t>(pattern.order()), 0);
  for (int x = 0; x < h.order(); ++x)
    weights[static_cast<std::size_t>(map[static_cast<std::size_t>(x)])] =
        static_cast<int>(tc.classes[static_cast<std::size_t>(x)].size());

  // confirm the reconstruction really matches
  if (canonical_form(blow_up(pattern, weights)) != canonical_form(g)) return std::nullopt;
  return weights;
}

}  // namespace trifree
