#include "trifree/canonical.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>

#include "trifree/graph6.hpp"

namespace trifree {

namespace {

// Iterated degree refinement. Returns a colour per vertex; colour ids are
// ranks of (previous colour, sorted neighbour colours) keys, so they are
// invariant under isomorphism.
std::vector<int> refine_colors(const Graph& g) {
  int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = g.degree(v);
  {
    // rank initial degrees
    std::map<int, int> rank;
    for (int c : color) rank.emplace(c, 0);
    int next = 0;
    for (auto& [k, r] : rank) r = next++;
    for (int& c : color) c = rank[c];
  }
  int ncolors = n == 0 ? 0 : 1 + *std::max_element(color.begin(), color.end());
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> rank;
    std::vector<std::pair<int, std::vector<int>>> key(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      for_set_bits(g.row(v), [&](int u) { nb.push_back(color[static_cast<std::size_t>(u)]); });
      std::sort(nb.begin(), nb.end());
      key[static_cast<std::size_t>(v)] = {color[static_cast<std::size_t>(v)], std::move(nb)};
      rank.emplace(key[static_cast<std::size_t>(v)], 0);
    }
    int next = 0;
    for (auto& [k, r] : rank) r = next++;
    if (next == ncolors) break;
    ncolors = next;
    for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = rank[key[static_cast<std::size_t>(v)]];
  }
  return color;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

class Searcher {
 public:
  explicit Searcher(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalResult run() {
    CanonicalResult res;
    if (n_ == 0) {
      res.code = encode_graph6(g_);
      return res;
    }
    setup_cells();
    perm_.assign(static_cast<std::size_t>(n_), -1);
    placed_ = 0;
    adjcode_.assign(static_cast<std::size_t>(n_), 0);
    cur_.assign(static_cast<std::size_t>(n_), 0);

    greedy_seed();
    uf_ = std::make_unique<UnionFind>(n_);
    recurse(0, /*tied=*/true);

    res.position_to_vertex = best_perm_;
    res.code = encode_graph6(relabel(g_, best_perm_));
    res.generators = std::move(gens_);
    res.orbit_of.assign(static_cast<std::size_t>(n_), 0);
    for (int v = 0; v < n_; ++v) res.orbit_of[static_cast<std::size_t>(v)] = uf_->find(v);
    return res;
  }

 private:
  void setup_cells() {
    std::vector<int> color = refine_colors(g_);
    int ncolors = 1 + *std::max_element(color.begin(), color.end());
    cells_.assign(static_cast<std::size_t>(ncolors), {});
    for (int v = 0; v < n_; ++v) cells_[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])].push_back(v);
    cell_of_position_.clear();
    for (int c = 0; c < ncolors; ++c)
      for (std::size_t i = 0; i < cells_[static_cast<std::size_t>(c)].size(); ++i)
        cell_of_position_.push_back(c);
  }

  void place(int v, int p) {
    cur_[static_cast<std::size_t>(p)] = adjcode_[static_cast<std::size_t>(v)];
    perm_[static_cast<std::size_t>(p)] = v;
    placed_ = set_with(placed_, v);
    std::uint64_t bit = std::uint64_t{1} << (63 - p);
    for_set_bits(g_.row(v), [&](int u) { adjcode_[static_cast<std::size_t>(u)] |= bit; });
  }

  void unplace(int v, int p) {
    placed_ = set_without(placed_, v);
    perm_[static_cast<std::size_t>(p)] = -1;
    std::uint64_t bit = std::uint64_t{1} << (63 - p);
    for_set_bits(g_.row(v), [&](int u) { adjcode_[static_cast<std::size_t>(u)] &= ~bit; });
  }

  // First descent: always take the first candidate with maximal code.
  void greedy_seed() {
    for (int p = 0; p < n_; ++p) {
      int pick = -1;
      std::uint64_t mx = 0;
      for (int v : cells_[static_cast<std::size_t>(cell_of_position_[static_cast<std::size_t>(p)])]) {
        if (set_contains(placed_, v)) continue;
        if (pick < 0 || adjcode_[static_cast<std::size_t>(v)] > mx) {
          pick = v;
          mx = adjcode_[static_cast<std::size_t>(v)];
        }
      }
      place(pick, p);
    }
    best_ = cur_;
    best_perm_ = perm_;
    for (int p = n_ - 1; p >= 0; --p) unplace(perm_[static_cast<std::size_t>(p)], p);
  }

  void record_automorphism_from_current() {
    std::vector<int> a(static_cast<std::size_t>(n_));
    bool identity = true;
    for (int q = 0; q < n_; ++q) {
      int from = best_perm_[static_cast<std::size_t>(q)];
      int to = perm_[static_cast<std::size_t>(q)];
      a[static_cast<std::size_t>(from)] = to;
      identity = identity && from == to;
    }
    if (identity) return;
    for (int v = 0; v < n_; ++v) uf_->unite(v, a[static_cast<std::size_t>(v)]);
    gens_.push_back(std::move(a));
  }

  void record_transposition(int u, int v) {
    std::vector<int> a(static_cast<std::size_t>(n_));
    std::iota(a.begin(), a.end(), 0);
    a[static_cast<std::size_t>(u)] = v;
    a[static_cast<std::size_t>(v)] = u;
    uf_->unite(u, v);
    gens_.push_back(std::move(a));
  }

  // u and v interchangeable by a transposition automorphism (twins).
  bool twins(int u, int v) const {
    std::uint64_t exclude = ~(set_with(set_with(0, u), v));
    return ((g_.row(u) ^ g_.row(v)) & exclude) == 0;
  }

  void recurse(int p, bool tied) {
    if (p == n_) {
      if (tied) {
        record_automorphism_from_current();
      } else if (cur_ > best_) {
        best_ = cur_;
        best_perm_ = perm_;
      } else if (cur_ == best_) {
        record_automorphism_from_current();
      }
      return;
    }
    int cid = cell_of_position_[static_cast<std::size_t>(p)];
    std::uint64_t mx = 0;
    bool any = false;
    for (int v : cells_[static_cast<std::size_t>(cid)]) {
      if (set_contains(placed_, v)) continue;
      std::uint64_t code = adjcode_[static_cast<std::size_t>(v)];
      if (!any || code > mx) mx = code;
      any = true;
    }
    if (tied && mx < best_[static_cast<std::size_t>(p)]) return;
    bool child_tied = tied && mx == best_[static_cast<std::size_t>(p)];

    candidates_buf_.clear();
    for (int v : cells_[static_cast<std::size_t>(cid)]) {
      if (set_contains(placed_, v)) continue;
      if (adjcode_[static_cast<std::size_t>(v)] != mx) continue;
      bool skip = false;
      for (int kept : candidates_buf_)
        if (twins(kept, v)) {
          record_transposition(kept, v);
          skip = true;
          break;
        }
      if (!skip) candidates_buf_.push_back(v);
    }
    // candidates_buf_ is invalidated by deeper levels; copy out.
    std::vector<int> candidates = candidates_buf_;
    for (int v : candidates) {
      place(v, p);
      recurse(p + 1, child_tied);
      unplace(v, p);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<std::vector<int>> cells_;
  std::vector<int> cell_of_position_;
  std::vector<int> perm_;
  VertexSet placed_ = 0;
  std::vector<std::uint64_t> adjcode_;
  std::vector<std::uint64_t> cur_;
  std::vector<std::uint64_t> best_;
  std::vector<int> best_perm_;
  std::vector<int> candidates_buf_;
  std::vector<std::vector<int>> gens_;
  std::unique_ptr<UnionFind> uf_;
};

}  // namespace

CanonicalResult canonical_label(const Graph& g) { return Searcher(g).run(); }

CanonicalCode canonical_form(const Graph& g) { return canonical_label(g).code; }

}  // namespace trifree
