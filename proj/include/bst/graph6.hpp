#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "bst/error.hpp"
#include "bst/graph.hpp"

namespace bst {

enum class Graph6Error {
  kEmpty,
  kBadHeader,
  kBadCharacter,
  kLengthMismatch,
  kNonzeroPadding,
  kUnsupportedOrder,
};

const char* to_string(Graph6Error e) noexcept;

class ParseError : public Error {
 public:
  ParseError(Graph6Error kind, const std::string& what) : Error(what), kind_(kind) {}
  Graph6Error kind() const noexcept { return kind_; }

 private:
  Graph6Error kind_;
};

/// graph6: order header, then the upper triangle in column-major order packed
/// six bits per byte, each byte offset by 63.
std::string graph6_encode(const Graph& g);

/// Strict decoder; a trailing '\n' or "\r\n" is tolerated.
Graph graph6_decode(std::string_view text);

/// Reads one graph per non-empty line.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace bst
