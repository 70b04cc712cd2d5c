#include <doctest.h>

#include "bst/error.hpp"
#include "bst/graph.hpp"

using namespace bst;

TEST_CASE("graph construction validates input") {
  const std::array<VertexSet, 2> asym{0b10, 0b00};
  CHECK_THROWS_AS(Graph::from_rows(2, asym), DomainError);
  const std::array<VertexSet, 2> loop{0b01, 0b00};
  CHECK_THROWS_AS(Graph::from_rows(2, loop), DomainError);
  const std::array<VertexSet, 2> beyond{0b100, 0b000};
  CHECK_THROWS_AS(Graph::from_rows(2, beyond), DomainError);
  CHECK_THROWS_AS(Graph::empty(0), DomainError);
  CHECK_THROWS_AS(Graph::empty(65), DomainError);
  const std::array<std::pair<int, int>, 1> bad{{{0, 3}}};
  CHECK_THROWS_AS(Graph::from_edges(3, bad), DomainError);
  CHECK(Graph().order() == 1);
  CHECK(Graph::empty(64).edge_count() == 0);
}

TEST_CASE("named families") {
  const Graph s = make_snk(7, 2, false);
  CHECK(s.order() == 7);
  CHECK(s.edge_count() == 2 * 7 - 3);
  CHECK(s.degree(0) == 6);
  CHECK(s.degree(6) == 2);
  const Graph sp = make_snk(7, 2, true);
  CHECK(sp.edge_count() == s.edge_count() + 1);
  CHECK(sp.adjacent(2, 3));

  const Graph f = make_friendship(3);
  CHECK(f.order() == 7);
  CHECK(f.edge_count() == 9);
  CHECK(f.degree(0) == 6);
  CHECK(has_unique_common_neighbors(f));
  CHECK_FALSE(has_unique_common_neighbors(make_cycle(5)));

  CHECK(make_complete_bipartite(2, 3).edge_count() == 6);
  CHECK(make_path(5).edge_count() == 4);
  CHECK(make_cycle(5).edge_count() == 5);
  CHECK(make_complete(6).edge_count() == 15);
  CHECK(make_star(6).degree(0) == 5);
  const Graph p = make_petersen();
  CHECK(p.order() == 10);
  CHECK(p.edge_count() == 15);
  CHECK(p.min_degree() == 3);
  CHECK(p.max_degree() == 3);

  CHECK_THROWS_AS(make_snk(3, 3, false), DomainError);
  CHECK_THROWS_AS(make_snk(3, 2, true), DomainError);
  CHECK_THROWS_AS(make_cycle(2), DomainError);
}

TEST_CASE("vertex deletion and induced subgraphs") {
  const Graph c = make_cycle(5);
  const Graph d = delete_vertex(c, 2);
  CHECK(d.order() == 4);
  CHECK(d.edge_count() == 3);
  CHECK_FALSE(d == make_path(4));
  CHECK(d.adjacent(2, 3));  // old 3-4
  CHECK(d.adjacent(0, 1));
  CHECK(induced_subgraph(make_complete(5), 0b10101) == make_complete(3));
  CHECK_THROWS_AS(delete_vertex(Graph(), 0), DomainError);
}

TEST_CASE("relabel, add_vertex, add_edge") {
  const Graph p = make_path(3);
  const std::array<int, 3> perm{1, 0, 2};
  const Graph r = relabel(p, perm);
  CHECK(r.adjacent(1, 0));
  CHECK(r.adjacent(0, 2));
  CHECK_FALSE(r.adjacent(1, 2));
  const std::array<int, 3> notperm{0, 0, 1};
  CHECK_THROWS_AS(relabel(p, notperm), DomainError);
  const Graph q = add_vertex(p, 0b101);
  CHECK(q == make_cycle(4));
  CHECK(add_edge(make_path(4), 0, 3) == make_cycle(4));
}

TEST_CASE("edge counting within and between sets") {
  const Graph k = make_complete(6);
  CHECK(k.edges_within(0b000111) == 3);
  CHECK(k.edges_between(0b000111, 0b111000) == 9);
  CHECK(k.edges().size() == 15);
}

TEST_CASE("connectivity") {
  const std::array<std::pair<int, int>, 3> e{{{0, 1}, {2, 3}, {3, 4}}};
  const Graph g = Graph::from_edges(6, e);
  const auto comps = components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == 0b000011);
  CHECK(comps[1] == 0b011100);
  CHECK(comps[2] == 0b100000);
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(make_petersen()));
  CHECK(reachable(g, 2, g.vertices()) == 0b011100);
}

TEST_CASE("structural recognition of S_{n,k} and S_{n,k}^+") {
  for (int n = 3; n <= 40; n += 7)
    for (int k = 1; k < n; ++k) {
      CHECK(is_snk(make_snk(n, k, false), k));
      if (k < n - 1) {
        CHECK(is_snk_plus(make_snk(n, k, true), k));
        CHECK_FALSE(is_snk(make_snk(n, k, true), k));
      }
    }
  CHECK_FALSE(is_snk(make_cycle(5), 1));
  CHECK(is_snk(make_star(9), 1));
  // K_n is S_{n,n-1}
  CHECK(is_snk(make_complete(5), 4));
}
