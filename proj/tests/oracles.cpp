#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "bst/enumerate.hpp"

namespace oracle {

using bst::Graph;
using bst::VertexSet;

namespace {

std::uint64_t certificate_under(const Graph& g, const std::vector<int>& perm) {
  // perm[v] = new label of v
  const int n = g.order();
  std::vector<int> inv(n);
  for (int v = 0; v < n; ++v) inv[perm[v]] = v;
  std::uint64_t bits = 0;
  int pos = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++pos)
      if (g.adjacent(inv[i], inv[j])) bits |= std::uint64_t{1} << pos;
  return bits;
}

}  // namespace

std::uint64_t brute_certificate(const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, certificate_under(g, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return brute_certificate(a) == brute_certificate(b);
}

std::vector<std::vector<int>> brute_automorphisms(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) ok = g.adjacent(u, v) == g.adjacent(perm[u], perm[v]);
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> edges;
  int pos = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++pos)
      if ((mask >> pos) & 1U) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

std::vector<std::uint64_t> labelled_classes(int n, bool connected_only) {
  const int pairs = n * (n - 1) / 2;
  std::set<std::uint64_t> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    const Graph g = graph_from_mask(n, mask);
    if (connected_only && !bst::is_connected(g)) continue;
    seen.insert(brute_certificate(g));
  }
  return {seen.begin(), seen.end()};
}

std::vector<long long> characteristic_polynomial(const Graph& g) {
  const int n = g.order();
  using Mat = std::vector<std::vector<long long>>;
  Mat a(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = g.adjacent(i, j) ? 1 : 0;
  Mat m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  std::vector<long long> c(n + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Mat am(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        if (a[i][l])
          for (int j = 0; j < n; ++j) am[i][j] += m[l][j];
    long long tr = 0;
    for (int i = 0; i < n; ++i) tr += am[i][i];
    c[k] = -tr / k;
    for (int i = 0; i < n; ++i) am[i][i] += c[k];
    m = std::move(am);
  }
  return c;
}

double charpoly_spectral_radius(const Graph& g) {
  const auto c = characteristic_polynomial(g);
  const int n = g.order();
  auto eval = [&](long double x, long double& d) {
    long double p = 0;
    d = 0;
    for (int i = 0; i <= n; ++i) {
      d = d * x + p;
      p = p * x + static_cast<long double>(c[i]);
    }
    return p;
  };
  // Newton from the right of every root descends monotonically onto the
  // largest one, since all roots are real.
  long double x = n + 1.0L;
  for (int it = 0; it < 10000; ++it) {
    long double d;
    const long double p = eval(x, d);
    if (d == 0) break;
    const long double step = p / d;
    x -= step;
    if (std::fabs(static_cast<double>(step)) < 1e-16) break;
  }
  // Confirm by bisection when the root is simple.
  long double d;
  const long double h = 1e-7L;
  long double lo = x - h, hi = x + h;
  long double plo = eval(lo, d), phi = eval(hi, d);
  if ((plo < 0) != (phi < 0)) {
    for (int i = 0; i < 200; ++i) {
      const long double mid = (lo + hi) / 2;
      const long double pm = eval(mid, d);
      if ((pm < 0) == (plo < 0)) {
        lo = mid;
        plo = pm;
      } else {
        hi = mid;
      }
    }
    x = (lo + hi) / 2;
  }
  return static_cast<double>(x);
}

double jacobi_spectral_radius(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = g.adjacent(i, j) ? 1.0 : 0.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-26) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  double best = a[0][0];
  for (int i = 1; i < n; ++i) best = std::max(best, a[i][i]);
  return best;
}

namespace {

bool sequences(const Graph& g, std::vector<int>& seq, std::vector<bool>& used, int l,
               const std::function<bool(const std::vector<int>&)>& accept) {
  if (static_cast<int>(seq.size()) == l) return accept(seq);
  for (int v = 0; v < g.order(); ++v) {
    if (used[v]) continue;
    if (!seq.empty() && !g.adjacent(seq.back(), v)) continue;
    used[v] = true;
    seq.push_back(v);
    const bool hit = sequences(g, seq, used, l, accept);
    seq.pop_back();
    used[v] = false;
    if (hit) return true;
  }
  return false;
}

bool any_sequence(const Graph& g, int l, const std::function<bool(const std::vector<int>&)>& accept) {
  if (l > g.order() || l < 1) return false;
  std::vector<int> seq;
  std::vector<bool> used(g.order(), false);
  return sequences(g, seq, used, l, accept);
}

}  // namespace

bool brute_has_path(const Graph& g, int l) {
  return any_sequence(g, l, [](const std::vector<int>&) { return true; });
}

bool brute_has_cycle(const Graph& g, int l) {
  return l >= 3 && any_sequence(g, l, [&](const std::vector<int>& s) { return g.adjacent(s.back(), s.front()); });
}

bool brute_has_path_with_ends_in(const Graph& g, VertexSet ends, int l) {
  return l >= 2 && any_sequence(g, l, [&](const std::vector<int>& s) {
           return bst::contains(ends, s.front()) && bst::contains(ends, s.back());
         });
}

std::string tree_code(const Graph& tree) {
  const int n = tree.order();
  if (n == 1) return "()";
  std::vector<int> deg(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = tree.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  std::vector<bool> gone(n, false);
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      gone[v] = true;
      --remaining;
      for (int u = 0; u < n; ++u)
        if (tree.adjacent(u, v) && !gone[u] && --deg[u] == 1) next.push_back(u);
    }
    layer = next;
  }
  std::vector<int> centres;
  for (int v = 0; v < n; ++v)
    if (!gone[v]) centres.push_back(v);
  std::function<std::string(int, int)> code = [&](int v, int parent) {
    std::vector<std::string> kids;
    for (int u = 0; u < n; ++u)
      if (u != parent && tree.adjacent(u, v)) kids.push_back(code(u, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    return s + ")";
  };
  std::string best = code(centres[0], -1);
  if (centres.size() == 2) best = std::min(best, code(centres[1], -1));
  return best;
}

std::vector<Graph> prufer_free_trees(int t) {
  if (t == 1) return {Graph::empty(1)};
  if (t == 2) return {bst::make_path(2)};
  std::set<std::string> seen;
  std::vector<Graph> out;
  std::vector<int> seq(t - 2, 0);
  for (;;) {
    std::vector<int> degree(t, 1);
    for (int x : seq) ++degree[x];
    std::vector<std::pair<int, int>> edges;
    for (int x : seq) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, x);
      --degree[leaf];
      --degree[x];
    }
    int u = -1, w = -1;
    for (int v = 0; v < t; ++v)
      if (degree[v] == 1) (u < 0 ? u : w) = v;
    edges.emplace_back(u, w);
    Graph tree = Graph::from_edges(t, edges);
    if (seen.insert(tree_code(tree)).second) out.push_back(tree);

    int i = t - 3;
    while (i >= 0 && seq[i] == t - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  return out;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

Graph random_connected_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  std::sort(edges.begin(), edges.end(), [](auto a, auto b) {
    return std::minmax(a.first, a.second) < std::minmax(b.first, b.second);
  });
  for (auto& e : edges) e = std::minmax(e.first, e.second);
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_edges(n, edges);
}

std::vector<Graph> all_graphs(int n, bool connected_only) {
  std::vector<Graph> out;
  bst::enumerate_graphs(n, {connected_only, {}}, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace oracle
