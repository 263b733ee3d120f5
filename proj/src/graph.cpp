#include "trifree/graph.hpp"

#include <stdexcept>

namespace trifree {

VertexSet vertex_set(std::span<const int> indices) {
  VertexSet s = 0;
  for (int v : indices) {
    if (v < 0 || v >= Graph::max_order) throw std::invalid_argument("vertex index out of range");
    s |= VertexSet{1} << v;
  }
  return s;
}

VertexSet vertex_set(std::initializer_list<int> indices) {
  return vertex_set(std::span<const int>(indices.begin(), indices.size()));
}

std::vector<int> set_members(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(set_size(s)));
  for_set_bits(s, [&](int v) { out.push_back(v); });
  return out;
}

Graph::Graph(int order, std::span<const std::pair<int, int>> edges) {
  if (order < 0) throw std::invalid_argument("negative order");
  if (order > max_order) throw std::invalid_argument("order exceeds supported maximum of 64");
  rows_.assign(static_cast<std::size_t>(order), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= order || v < 0 || v >= order)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop rejected");
    rows_[static_cast<std::size_t>(u)] |= VertexSet{1} << v;
    rows_[static_cast<std::size_t>(v)] |= VertexSet{1} << u;
  }
}

Graph::Graph(int order, std::initializer_list<std::pair<int, int>> edges)
    : Graph(order, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

Graph Graph::from_rows(std::vector<std::uint64_t> rows) {
  int n = static_cast<int>(rows.size());
  if (n > max_order) throw std::invalid_argument("order exceeds supported maximum of 64");
  VertexSet all = n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
  for (int v = 0; v < n; ++v) {
    if (rows[static_cast<std::size_t>(v)] & ~all) throw std::invalid_argument("adjacency bit beyond order");
    if (set_contains(rows[static_cast<std::size_t>(v)], v)) throw std::invalid_argument("self-loop rejected");
  }
  for (int v = 0; v < n; ++v)
    for_set_bits(rows[static_cast<std::size_t>(v)], [&](int u) {
      if (!set_contains(rows[static_cast<std::size_t>(u)], v)) throw std::invalid_argument("adjacency not symmetric");
    });
  Graph g;
  g.rows_ = std::move(rows);
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (std::uint64_t r : rows_) twice += std::popcount(r);
  return twice / 2;
}

VertexSet Graph::vertices() const {
  int n = order();
  return n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v + 1 < order(); ++v) {
    std::uint64_t above = rows_[static_cast<std::size_t>(v)] >> (v + 1) << (v + 1);
    for_set_bits(above, [&](int u) { out.emplace_back(v, u); });
  }
  return out;
}

bool Graph::is_independent(VertexSet s) const {
  bool ok = true;
  for_set_bits(s, [&](int v) { ok = ok && !(rows_[static_cast<std::size_t>(v)] & s); });
  return ok;
}

bool is_triangle_free(const Graph& g) {
  // A triangle exists iff the endpoints of some edge share a neighbour.
  for (int v = 0; v < g.order(); ++v) {
    VertexSet nv = g.row(v);
    bool hit = false;
    for_set_bits(nv, [&](int u) { hit = hit || (u > v && (g.row(u) & nv)); });
    if (hit) return false;
  }
  return true;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    int d = g.degree(v);
    p.degrees.push_back(d);
    if (d > p.max_degree) p.max_degree = d;
  }
  return p;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  if (keep & ~g.vertices()) throw std::invalid_argument("keep set not a subset of vertices");
  std::vector<int> old_of = set_members(keep);
  int m = static_cast<int>(old_of.size());
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(m), 0);
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q)
      if (g.has_edge(old_of[static_cast<std::size_t>(p)], old_of[static_cast<std::size_t>(q)])) {
        rows[static_cast<std::size_t>(p)] |= VertexSet{1} << q;
        rows[static_cast<std::size_t>(q)] |= VertexSet{1} << p;
      }
  return Graph::from_rows(std::move(rows));
}

Graph relabel(const Graph& g, std::span<const int> position_to_vertex) {
  int n = g.order();
  if (static_cast<int>(position_to_vertex.size()) != n)
    throw std::invalid_argument("relabelling must cover every vertex");
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (g.has_edge(position_to_vertex[static_cast<std::size_t>(p)],
                     position_to_vertex[static_cast<std::size_t>(q)])) {
        rows[static_cast<std::size_t>(p)] |= VertexSet{1} << q;
        rows[static_cast<std::size_t>(q)] |= VertexSet{1} << p;
      }
  return Graph::from_rows(std::move(rows));
}

}  // namespace trifree
