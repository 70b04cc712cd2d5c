#include "bst/graph6.hpp"

#include <array>

namespace bst {

const char* to_string(Graph6Error e) noexcept {
  switch (e) {
    case Graph6Error::kEmpty: return "empty input";
    case Graph6Error::kBadHeader: return "malformed header";
    case Graph6Error::kBadCharacter: return "character outside the graph6 range";
    case Graph6Error::kLengthMismatch: return "body length does not match the order";
    case Graph6Error::kNonzeroPadding: return "nonzero padding bits";
    case Graph6Error::kUnsupportedOrder: return "unsupported order";
  }
  return "unknown";
}

namespace {

[[noreturn]] void fail(Graph6Error kind, const std::string& detail) {
  throw ParseError(kind, std::string("graph6: ") + to_string(kind) + (detail.empty() ? "" : ": " + detail));
}

bool printable(char c) { return c >= 63 && c <= 126; }

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.empty()) fail(Graph6Error::kEmpty, "");

  for (char c : text)
    if (!printable(c)) fail(Graph6Error::kBadCharacter, std::string("byte ") + std::to_string(static_cast<unsigned char>(c)));

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') fail(Graph6Error::kUnsupportedOrder, "8-byte header");
    if (text.size() < 4) fail(Graph6Error::kBadHeader, "truncated 4-byte header");
    n = (static_cast<long>(text[1] - 63) << 12) | (static_cast<long>(text[2] - 63) << 6) | (text[3] - 63);
    if (n <= 62) fail(Graph6Error::kBadHeader, "long header used for order " + std::to_string(n));
    pos = 4;
  }
  if (n < 1 || n > kMaxOrder) fail(Graph6Error::kUnsupportedOrder, "order " + std::to_string(n));

  const long bit_count = n * (n - 1) / 2;
  const long expected = (bit_count + 5) / 6;
  if (static_cast<long>(text.size() - pos) != expected)
    fail(Graph6Error::kLengthMismatch,
         "expected " + std::to_string(expected) + " body bytes, got " + std::to_string(text.size() - pos));

  std::array<VertexSet, kMaxOrder> rows{};
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) {
        rows[i] |= singleton(j);
        rows[j] |= singleton(i);
      }
    }
  }
  if (k % 6) {
    const int byte = text[pos + k / 6] - 63;
    if (byte & ((1 << (6 - k % 6)) - 1)) fail(Graph6Error::kNonzeroPadding, "");
  }
  return detail::make_graph_unchecked(static_cast<int>(n), rows);
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(graph6_decode(line));
  }
  return out;
}

}  // namespace bst
