#include "trifree/graph6.hpp"

#include <sstream>

namespace trifree {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void append_size(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    // 63 <= n <= 258047: '~' then 18 bits in three characters.
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  append_size(out, n);
  int acc = 0;
  int nbits = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph decode_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) {
    base = kHeader.size();
    text.remove_prefix(kHeader.size());
  }
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 input", base);

  auto value_at = [&](std::size_t i) -> int {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw Graph6Error("character out of graph6 range", base + i);
    return c - 63;
  };

  std::size_t pos = 0;
  long long n;
  if (text[0] != '~') {
    n = value_at(0);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~')
      throw Graph6Error("orders beyond 258047 not supported", base + 1);
    if (text.size() < 4) throw Graph6Error("truncated order field", base + text.size());
    n = (static_cast<long long>(value_at(1)) << 12) | (value_at(2) << 6) | value_at(3);
    pos = 4;
  }
  if (n > Graph::max_order)
    throw Graph6Error("order exceeds supported maximum of 64", base);

  long long bits = n * (n - 1) / 2;
  std::size_t want = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos < want)
    throw Graph6Error("truncated adjacency payload", base + text.size());
  if (text.size() - pos > want)
    throw Graph6Error("trailing characters after adjacency payload", base + pos + want);

  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  long long bit = 0;
  int row = 0, col = 1;
  for (std::size_t i = pos; i < text.size(); ++i) {
    int v = value_at(i);
    for (int b = 5; b >= 0; --b, ++bit) {
      int on = (v >> b) & 1;
      if (bit >= bits) {
        if (on) throw Graph6Error("nonzero padding bit", base + i);
        continue;
      }
      if (on) {
        rows[static_cast<std::size_t>(row)] |= VertexSet{1} << col;
        rows[static_cast<std::size_t>(col)] |= VertexSet{1} << row;
      }
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  return Graph::from_rows(std::move(rows));
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace trifree
