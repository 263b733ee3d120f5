#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace trifree {

// Bitmask over the vertex indices 0..order-1 of some graph.
using VertexSet = std::uint64_t;

VertexSet vertex_set(std::span<const int> indices);
VertexSet vertex_set(std::initializer_list<int> indices);
std::vector<int> set_members(VertexSet s);

inline int set_size(VertexSet s) { return std::popcount(s); }
inline bool set_contains(VertexSet s, int v) { return (s >> v) & 1u; }
inline VertexSet set_with(VertexSet s, int v) { return s | (VertexSet{1} << v); }
inline VertexSet set_without(VertexSet s, int v) { return s & ~(VertexSet{1} << v); }

// Lowest set bit, -1 on empty.
inline int set_first(VertexSet s) { return s ? std::countr_zero(s) : -1; }

template <class Fn>
void for_set_bits(VertexSet s, Fn&& fn) {
  while (s) {
    int v = std::countr_zero(s);
    s &= s - 1;
    fn(v);
  }
}

// Simple undirected graph on at most 64 vertices, one adjacency bit row per
// vertex. Immutable after construction; all transforms return new graphs.
class Graph {
 public:
  static constexpr int max_order = 64;

  Graph() = default;
  Graph(int order, std::span<const std::pair<int, int>> edges);
  Graph(int order, std::initializer_list<std::pair<int, int>> edges);

  // Takes ownership of prebuilt rows; validates symmetry and loop-freeness.
  static Graph from_rows(std::vector<std::uint64_t> rows);

  int order() const { return static_cast<int>(rows_.size()); }
  std::uint64_t row(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  bool has_edge(int u, int v) const { return set_contains(rows_[static_cast<std::size_t>(u)], v); }
  int degree(int v) const { return std::popcount(rows_[static_cast<std::size_t>(v)]); }
  int edge_count() const;
  VertexSet vertices() const;
  std::vector<std::pair<int, int>> edges() const;
  bool is_independent(VertexSet s) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::uint64_t> rows_;
};

bool is_triangle_free(const Graph& g);

struct DegreeProfile {
  std::vector<int> degrees;
  int max_degree = 0;
};
DegreeProfile degree_profile(const Graph& g);

// Vertices of `keep` relabelled 0..|keep|-1 in ascending original order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

// New graph whose vertex p is `position_to_vertex[p]` of g.
Graph relabel(const Graph& g, std::span<const int> position_to_vertex);

}  // namespace trifree
