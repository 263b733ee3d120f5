#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "trifree/graph.hpp"

namespace trifree {

// Malformed graph6 input; `offset` is the byte position of the defect.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Standard graph6: N(n) header then ceil(n(n-1)/2 / 6) payload characters,
// column-major upper triangle, six bits per character offset by 63.
std::string encode_graph6(const Graph& g);

// Accepts an optional ">>graph6<<" prefix. Strict about length, character
// range 63..126 and zero padding bits.
Graph decode_graph6(std::string_view text);

// Human-oriented DOT output; formatting is not normative.
std::string to_dot(const Graph& g, std::string_view name = "g");

}  // namespace trifree
