#include <doctest.h>

#include <sstream>

#include "bst/graph6.hpp"
#include "oracles.hpp"

using namespace bst;

TEST_CASE("graph6 known encodings") {
  CHECK(graph6_encode(Graph()) == "@");
  CHECK(graph6_encode(make_complete(3)) == "Bw");
  CHECK(graph6_encode(make_complete(4)) == "C~");
  CHECK(graph6_encode(Graph::empty(5)) == "D??");
  CHECK(graph6_encode(make_petersen()) == "IheA@GUAo");
  CHECK(graph6_decode("IheA@GUAo") == make_petersen());
  CHECK(graph6_decode("Bw\n") == make_complete(3));
  CHECK(graph6_decode("Bw\r\n") == make_complete(3));
}

TEST_CASE("graph6 round trip, including the long header") {
  std::mt19937_64 rng(7);
  for (int n : {1, 2, 5, 17, 62, 63, 64}) {
    for (int rep = 0; rep < 5; ++rep) {
      const Graph g = oracle::random_graph(rng, n, 0.3);
      const std::string s = graph6_encode(g);
      if (n > 62) CHECK(s[0] == '~');
      for (char c : s) {
        CHECK(c >= 63);
        CHECK(c <= 126);
      }
      CHECK(graph6_decode(s) == g);
    }
  }
}

TEST_CASE("graph6 decoder rejects malformed input") {
  auto kind = [](std::string_view s) {
    try {
      graph6_decode(s);
    } catch (const ParseError& e) {
      return e.kind();
    }
    FAIL("no error");
    return Graph6Error::kEmpty;
  };
  CHECK(kind("") == Graph6Error::kEmpty);
  CHECK(kind("?") == Graph6Error::kUnsupportedOrder);
  CHECK(kind("~?") == Graph6Error::kBadHeader);
  CHECK(kind("~??@") == Graph6Error::kBadHeader);
  CHECK(kind(" w") == Graph6Error::kBadCharacter);
  CHECK(kind("B") == Graph6Error::kLengthMismatch);
  CHECK(kind("Bww") == Graph6Error::kLengthMismatch);
  CHECK(kind("B!") == Graph6Error::kBadCharacter);
  CHECK(kind("Bx") == Graph6Error::kNonzeroPadding);
  CHECK(kind("~?A?") == Graph6Error::kUnsupportedOrder);
}

TEST_CASE("graph6 stream reader") {
  std::istringstream in("Bw\n\nC~\n@\n");
  const auto gs = read_graph6_stream(in);
  REQUIRE(gs.size() == 3);
  CHECK(gs[1] == make_complete(4));
}
