#include "bst/trees.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <string>

#include "bst/canonical.hpp"
#include "bst/error.hpp"

namespace bst {

std::vector<std::vector<int>> rooted_level_sequences(int t) {
  if (t < 1) throw DomainError("tree order must be positive");
  std::vector<std::vector<int>> out;
  std::vector<int> l(t);
  for (int i = 0; i < t; ++i) l[i] = i;
  for (;;) {
    out.push_back(l);
    int p = t - 1;
    while (p >= 0 && l[p] <= 1) --p;
    if (p < 0) break;
    int q = p - 1;
    while (l[q] != l[p] - 1) --q;
    for (int i = p; i < t; ++i) l[i] = l[i - (p - q)];
  }
  return out;
}

Graph tree_from_level_sequence(const std::vector<int>& levels) {
  const int t = static_cast<int>(levels.size());
  if (t < 1 || levels[0] != 0) throw DomainError("level sequence must start at the root");
  std::vector<std::pair<int, int>> edges;
  std::array<int, kMaxOrder> last_at_level{};
  last_at_level[0] = 0;
  for (int i = 1; i < t; ++i) {
    if (levels[i] < 1 || levels[i] > levels[i - 1] + 1) throw DomainError("malformed level sequence");
    edges.emplace_back(last_at_level[levels[i] - 1], i);
    last_at_level[levels[i]] = i;
  }
  return Graph::from_edges(t, edges);
}

namespace {

std::vector<Graph> generate_free_trees(int t) {
  std::vector<Graph> out;
  std::set<CanonicalForm> seen;
  for (const auto& levels : rooted_level_sequences(t)) {
    Graph tree = tree_from_level_sequence(levels);
    if (seen.insert(canonical_form(tree)).second) out.push_back(std::move(tree));
  }
  return out;
}

struct Embedding {
  int m = 0;
  std::array<int, kMaxOrder> order{};   // tree vertices in BFS order
  std::array<int, kMaxOrder> parent{};  // parent position in `order`, -1 at root
  std::array<int, kMaxOrder> degree{};
  std::array<int, kMaxOrder> image{};
};

bool extend(const Graph& g, Embedding& e, int i, VertexSet used) {
  if (i == e.m) return true;
  const VertexSet candidates =
      e.parent[i] < 0 ? g.vertices() : g.neighbors(e.image[e.parent[i]]);
  for (VertexSet s = candidates & ~used; s; s &= s - 1) {
    const int v = std::countr_zero(s);
    if (g.degree(v) < e.degree[i]) continue;
    e.image[i] = v;
    if (extend(g, e, i + 1, used | singleton(v))) return true;
  }
  return false;
}

}  // namespace

const std::vector<Graph>& free_trees(int t) {
  if (t < 1) throw DomainError("tree order must be positive");
  if (t > kMaxTreeOrder) throw UnsupportedError("free trees supported up to order " + std::to_string(kMaxTreeOrder));
  static const std::array<std::vector<Graph>, kMaxTreeOrder + 1> cache = [] {
    std::array<std::vector<Graph>, kMaxTreeOrder + 1> all;
    for (int i = 1; i <= kMaxTreeOrder; ++i) all[i] = generate_free_trees(i);
    return all;
  }();
  return cache[t];
}

bool contains_tree(const Graph& g, const Graph& tree) {
  const int m = tree.order();
  if (m > g.order()) return false;
  if (tree.edge_count() != m - 1 || !is_connected(tree)) throw DomainError("pattern is not a tree");
  if (g.edge_count() < m - 1) return false;

  Embedding e;
  e.m = m;
  int root = 0;
  for (int v = 1; v < m; ++v)
    if (tree.degree(v) > tree.degree(root)) root = v;
  e.order[0] = root;
  e.parent[0] = -1;
  VertexSet seen = singleton(root);
  for (int head = 0, tail = 1; head < tail; ++head) {
    const int u = e.order[head];
    e.degree[head] = tree.degree(u);
    for (VertexSet s = tree.neighbors(u) & ~seen; s; s &= s - 1) {
      const int w = std::countr_zero(s);
      seen |= singleton(w);
      e.order[tail] = w;
      e.parent[tail] = head;
      ++tail;
    }
  }
  return extend(g, e, 0, 0);
}

TreeContainment contains_all_trees(const Graph& g, int t) {
  TreeContainment out;
  for (const Graph& tree : free_trees(t)) {
    if (!contains_tree(g, tree)) {
      out.missing = tree;
      return out;
    }
  }
  out.all = true;
  return out;
}

}  // namespace bst
