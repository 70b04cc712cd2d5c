#include "bst/graph.hpp"

#include <algorithm>
#include <string>

#include "bst/error.hpp"

namespace bst {

namespace detail {

Graph make_graph_unchecked(int n, std::span<const std::uint64_t> rows) noexcept {
  Graph g;
  g.n_ = n;
  std::copy_n(rows.begin(), n, g.adj_.begin());
  return g;
}

}  // namespace detail

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxOrder)
    throw DomainError("graph order must be in 1..64, got " + std::to_string(n));
}

void check_vertex(const Graph& g, int u) {
  if (u < 0 || u >= g.order())
    throw DomainError("vertex " + std::to_string(u) + " out of range for order " +
                      std::to_string(g.order()));
}

}  // namespace

Graph Graph::from_rows(int n, std::span<const VertexSet> rows) {
  check_order(n);
  if (static_cast<int>(rows.size()) < n) throw DomainError("fewer adjacency rows than vertices");
  const VertexSet mask = all_vertices(n);
  for (int i = 0; i < n; ++i) {
    if (rows[i] & ~mask) throw DomainError("adjacency row references a vertex beyond the order");
    if (contains(rows[i], i)) throw DomainError("loop at vertex " + std::to_string(i));
    for (VertexSet s = rows[i]; s; s &= s - 1) {
      const int j = std::countr_zero(s);
      if (!contains(rows[j], i)) throw DomainError("adjacency is not symmetric");
    }
  }
  return detail::make_graph_unchecked(n, rows);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  check_order(n);
  std::array<VertexSet, kMaxOrder> rows{};
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw DomainError("edge endpoint out of range");
    if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
    rows[u] |= singleton(v);
    rows[v] |= singleton(u);
  }
  return detail::make_graph_unchecked(n, rows);
}

Graph Graph::empty(int n) {
  check_order(n);
  const std::array<VertexSet, kMaxOrder> rows{};
  return detail::make_graph_unchecked(n, rows);
}

int Graph::edge_count() const noexcept {
  int twice = 0;
  for (int i = 0; i < n_; ++i) twice += popcount(adj_[i]);
  return twice / 2;
}

int Graph::min_degree() const noexcept {
  int d = n_;
  for (int i = 0; i < n_; ++i) d = std::min(d, popcount(adj_[i]));
  return d;
}

int Graph::max_degree() const noexcept {
  int d = 0;
  for (int i = 0; i < n_; ++i) d = std::max(d, popcount(adj_[i]));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (VertexSet s = adj_[i] & ~all_vertices(i + 1); s; s &= s - 1)
      out.emplace_back(i, std::countr_zero(s));
  return out;
}

int Graph::edges_within(VertexSet set) const noexcept {
  int twice = 0;
  for (VertexSet s = set; s; s &= s - 1) twice += popcount(adj_[std::countr_zero(s)] & set);
  return twice / 2;
}

int Graph::edges_between(VertexSet a, VertexSet b) const noexcept {
  int count = 0;
  for (VertexSet s = a; s; s &= s - 1) count += popcount(adj_[std::countr_zero(s)] & b);
  return count;
}

Graph make_snk(int n, int k, bool plus) {
  check_order(n);
  if (k < 1 || k >= n)
    throw DomainError("S_{n,k} requires 1 <= k < n (n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ")");
  if (plus && n - k < 2) throw DomainError("S_{n,k}^+ requires n - k >= 2");
  std::array<VertexSet, kMaxOrder> rows{};
  const VertexSet all = all_vertices(n);
  const VertexSet clique = all_vertices(k);
  for (int i = 0; i < k; ++i) rows[i] = all & ~singleton(i);
  for (int i = k; i < n; ++i) rows[i] = clique;
  if (plus) {
    rows[k] |= singleton(k + 1);
    rows[k + 1] |= singleton(k);
  }
  return detail::make_graph_unchecked(n, rows);
}

Graph make_friendship(int t) {
  if (t < 1) throw DomainError("friendship graph needs at least one triangle");
  if (2 * t + 1 > kMaxOrder) throw DomainError("friendship graph exceeds 64 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < t; ++i) {
    e.emplace_back(0, 2 * i + 1);
    e.emplace_back(0, 2 * i + 2);
    e.emplace_back(2 * i + 1, 2 * i + 2);
  }
  return Graph::from_edges(2 * t + 1, e);
}

Graph make_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw DomainError("complete bipartite parts must be non-empty");
  if (a + b > kMaxOrder) throw DomainError("complete bipartite graph exceeds 64 vertices");
  const int n = a + b;
  std::array<VertexSet, kMaxOrder> rows{};
  const VertexSet left = all_vertices(a);
  const VertexSet right = all_vertices(n) & ~left;
  for (int i = 0; i < a; ++i) rows[i] = right;
  for (int i = a; i < n; ++i) rows[i] = left;
  return detail::make_graph_unchecked(n, rows);
}

Graph make_path(int n) {
  check_order(n);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph make_cycle(int n) {
  if (n < 3) throw DomainError("a cycle needs at least 3 vertices");
  check_order(n);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph make_complete(int n) {
  check_order(n);
  std::array<VertexSet, kMaxOrder> rows{};
  for (int i = 0; i < n; ++i) rows[i] = all_vertices(n) & ~singleton(i);
  return detail::make_graph_unchecked(n, rows);
}

Graph make_star(int n) {
  if (n < 2) return Graph::empty(std::max(n, 1));
  return make_snk(n, 1, false);
}

Graph make_petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, e);
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  keep &= g.vertices();
  const int m = popcount(keep);
  if (m < 1) throw DomainError("induced subgraph must keep at least one vertex");
  std::array<int, kMaxOrder> index{};
  int next = 0;
  for (VertexSet s = keep; s; s &= s - 1) index[std::countr_zero(s)] = next++;
  std::array<VertexSet, kMaxOrder> rows{};
  for (VertexSet s = keep; s; s &= s - 1) {
    const int v = std::countr_zero(s);
    VertexSet row = 0;
    for (VertexSet t = g.neighbors(v) & keep; t; t &= t - 1) row |= singleton(index[std::countr_zero(t)]);
    rows[index[v]] = row;
  }
  return detail::make_graph_unchecked(m, rows);
}

Graph delete_vertex(const Graph& g, int u) {
  check_vertex(g, u);
  if (g.order() == 1) throw DomainError("cannot delete the only vertex of a graph");
  return induced_subgraph(g, g.vertices() & ~singleton(u));
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw DomainError("permutation length differs from graph order");
  VertexSet seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || contains(seen, p)) throw DomainError("relabeling is not a permutation");
    seen |= singleton(p);
  }
  std::array<VertexSet, kMaxOrder> rows{};
  for (int v = 0; v < n; ++v) {
    VertexSet row = 0;
    for (VertexSet s = g.neighbors(v); s; s &= s - 1) row |= singleton(perm[std::countr_zero(s)]);
    rows[perm[v]] = row;
  }
  return detail::make_graph_unchecked(n, rows);
}

Graph add_vertex(const Graph& g, VertexSet nbrs) {
  const int n = g.order();
  if (n >= kMaxOrder) throw DomainError("graph already has 64 vertices");
  if (nbrs & ~g.vertices()) throw DomainError("new vertex neighbourhood references a missing vertex");
  std::array<VertexSet, kMaxOrder> rows{};
  for (int i = 0; i < n; ++i) rows[i] = g.neighbors(i) | (contains(nbrs, i) ? singleton(n) : 0);
  rows[n] = nbrs;
  return detail::make_graph_unchecked(n + 1, rows);
}

Graph add_edge(const Graph& g, int u, int v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) throw DomainError("cannot add a loop");
  std::array<VertexSet, kMaxOrder> rows{};
  std::copy(g.rows().begin(), g.rows().end(), rows.begin());
  rows[u] |= singleton(v);
  rows[v] |= singleton(u);
  return detail::make_graph_unchecked(g.order(), rows);
}

VertexSet reachable(const Graph& g, int start, VertexSet within) {
  VertexSet seen = singleton(start);
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet s = frontier; s; s &= s - 1) next |= g.neighbors(std::countr_zero(s));
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (left) {
    const VertexSet c = reachable(g, std::countr_zero(left), left);
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

bool is_connected(const Graph& g) { return reachable(g, 0, g.vertices()) == g.vertices(); }

namespace {

// Picks k universal vertices as the clique; -1 edges remaining if impossible.
int edges_outside_universal_core(const Graph& g, int k) {
  const int n = g.order();
  if (k < 1 || k >= n) return -1;
  VertexSet core = 0;
  int taken = 0;
  for (int v = 0; v < n && taken < k; ++v) {
    if (g.degree(v) == n - 1) {
      core |= singleton(v);
      ++taken;
    }
  }
  if (taken < k) return -1;
  return g.edges_within(g.vertices() & ~core);
}

}  // namespace

bool is_snk(const Graph& g, int k) { return edges_outside_universal_core(g, k) == 0; }

bool is_snk_plus(const Graph& g, int k) {
  if (g.order() - k < 2) return false;
  return edges_outside_universal_core(g, k) == 1;
}

bool has_unique_common_neighbors(const Graph& g) {
  const int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (popcount(g.neighbors(u) & g.neighbors(v)) != 1) return false;
  return true;
}

}  // namespace bst
