#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace bst {

class Graph;

namespace detail {
/// Fast path used by the enumerator and the graph transforms, which already
/// guarantee symmetry and loop-freeness.
Graph make_graph_unchecked(int n, std::span<const std::uint64_t> rows) noexcept;
}  // namespace detail

/// A set of vertex indices packed into one machine word.
using VertexSet = std::uint64_t;

inline constexpr int kMaxOrder = 64;

constexpr VertexSet singleton(int v) noexcept { return VertexSet{1} << v; }

constexpr VertexSet all_vertices(int n) noexcept {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr bool contains(VertexSet s, int v) noexcept { return (s >> v) & 1U; }

constexpr int popcount(VertexSet s) noexcept { return std::popcount(s); }

/// Simple undirected graph on 1..64 vertices. Row i of the adjacency holds
/// the neighbourhood of vertex i as a bitset. Values are immutable once built.
class Graph {
 public:
  /// Builds from adjacency rows. Throws DomainError if the rows are not
  /// symmetric, contain a loop, or reference a vertex >= n.
  static Graph from_rows(int n, std::span<const VertexSet> rows);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  /// Edgeless graph on n vertices.
  static Graph empty(int n);

  /// The single-vertex graph.
  Graph() = default;

  int order() const noexcept { return n_; }
  VertexSet neighbors(int v) const noexcept { return adj_[v]; }
  std::span<const VertexSet> rows() const noexcept { return {adj_.data(), static_cast<std::size_t>(n_)}; }
  bool adjacent(int u, int v) const noexcept { return contains(adj_[u], v); }
  int degree(int v) const noexcept { return popcount(adj_[v]); }
  VertexSet vertices() const noexcept { return all_vertices(n_); }

  int edge_count() const noexcept;
  int min_degree() const noexcept;
  int max_degree() const noexcept;
  std::vector<std::pair<int, int>> edges() const;

  /// Number of edges with both ends in `set`.
  int edges_within(VertexSet set) const noexcept;
  /// Number of edges with one end in `a` and the other in `b` (disjoint sets).
  int edges_between(VertexSet a, VertexSet b) const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    if (a.n_ != b.n_) return false;
    for (int i = 0; i < a.n_; ++i)
      if (a.adj_[i] != b.adj_[i]) return false;
    return true;
  }

 private:
  friend Graph detail::make_graph_unchecked(int n, std::span<const std::uint64_t> rows) noexcept;

  int n_ = 1;
  std::array<VertexSet, kMaxOrder> adj_{};
};

/// The join of K_k with an independent set of n-k vertices. Clique vertices
/// occupy 0..k-1. With `plus`, vertices k and k+1 are additionally joined.
Graph make_snk(int n, int k, bool plus);

/// t triangles sharing vertex 0; triangle i uses vertices 2i+1 and 2i+2.
Graph make_friendship(int t);

/// K_{a,b}: vertices 0..a-1 versus a..a+b-1.
Graph make_complete_bipartite(int a, int b);

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_star(int n);
Graph make_petersen();

/// Removes vertex u; vertices above u shift down by one.
Graph delete_vertex(const Graph& g, int u);

/// Subgraph induced on `keep`, relabelled in increasing index order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

/// Relabels vertex v as perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

/// Adds one new vertex (index n) adjacent to `nbrs`.
Graph add_vertex(const Graph& g, VertexSet nbrs);

Graph add_edge(const Graph& g, int u, int v);

/// Connected components as vertex sets, ordered by their lowest vertex.
std::vector<VertexSet> components(const Graph& g);

/// Vertices reachable from `start` inside `within`.
VertexSet reachable(const Graph& g, int start, VertexSet within);

bool is_connected(const Graph& g);

/// Structural recognizers, valid at every order.
bool is_snk(const Graph& g, int k);
bool is_snk_plus(const Graph& g, int k);
/// Every two distinct vertices have exactly one common neighbour.
bool has_unique_common_neighbors(const Graph& g);

}  // namespace bst
