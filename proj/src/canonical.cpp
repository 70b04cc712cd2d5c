#include "bst/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <string>

#include "bst/error.hpp"
#include "bst/graph6.hpp"

namespace bst {
namespace detail {

namespace {

constexpr int kNoJump = 1 << 20;

int find_root(std::array<std::uint8_t, kMaxOrder>& uf, int v) {
  while (uf[v] != v) {
    uf[v] = uf[uf[v]];
    v = uf[v];
  }
  return v;
}

void unite(std::array<std::uint8_t, kMaxOrder>& uf, int a, int b) {
  a = find_root(uf, a);
  b = find_root(uf, b);
  if (a == b) return;
  if (a < b) std::swap(a, b);
  uf[a] = static_cast<std::uint8_t>(b);
}

}  // namespace

void Canonizer::run(int n, const VertexSet* adj) {
  n_ = n;
  adj_ = adj;
  have_first_ = false;
  best_is_first_ = true;
  auts_.clear();

  Partition root;
  root.cells = 1;
  root.cell[0] = all_vertices(n);
  refine(root, all_vertices(n));
  search(0, root);
  compute_orbits();
}

// Equitable refinement. Splitters are processed in FIFO order; each split cell
// is replaced in place by its fragments ordered by ascending neighbour count,
// so the result depends only on the labelled structure, not on vertex names.
void Canonizer::refine(Partition& p, VertexSet first_splitter) const {
  std::array<VertexSet, 2 * kMaxOrder + 2> queue;
  int head = 0;
  int tail = 0;
  queue[tail++] = first_splitter;
  std::array<VertexSet, kMaxOrder + 1> bucket{};

  while (head < tail && p.cells < n_) {
    const VertexSet w = queue[head++];
    for (int i = 0; i < p.cells; ++i) {
      const VertexSet x = p.cell[i];
      if ((x & (x - 1)) == 0) continue;
      int lo = kMaxOrder + 1;
      int hi = -1;
      for (VertexSet s = x; s; s &= s - 1) {
        const int v = std::countr_zero(s);
        const int c = std::popcount(adj_[v] & w);
        bucket[c] |= singleton(v);
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
      if (lo == hi) {
        bucket[lo] = 0;
        continue;
      }
      int fragments = 0;
      std::array<VertexSet, kMaxOrder> frag;
      for (int c = lo; c <= hi; ++c) {
        if (bucket[c]) {
          frag[fragments++] = bucket[c];
          bucket[c] = 0;
        }
      }
      for (int j = p.cells - 1; j > i; --j) p.cell[j + fragments - 1] = p.cell[j];
      for (int f = 0; f < fragments; ++f) {
        p.cell[i + f] = frag[f];
        queue[tail++] = frag[f];
      }
      p.cells += fragments - 1;
      i += fragments - 1;
    }
  }
}

bool Canonizer::pruned(int level, int v, VertexSet explored, std::array<std::uint8_t, kMaxOrder>& uf,
                       std::size_t& uf_auts) const {
  if (auts_.empty()) return false;
  if (uf_auts != auts_.size()) {
    for (int i = 0; i < n_; ++i) uf[i] = static_cast<std::uint8_t>(i);
    for (const auto& a : auts_) {
      bool fixes = true;
      for (int l = 0; l < level && fixes; ++l) fixes = a[path_[l]] == path_[l];
      if (!fixes) continue;
      for (int i = 0; i < n_; ++i)
        if (a[i] != i) unite(uf, i, a[i]);
    }
    uf_auts = auts_.size();
  }
  const int rv = find_root(uf, v);
  for (VertexSet s = explored; s; s &= s - 1)
    if (find_root(uf, std::countr_zero(s)) == rv) return true;
  return false;
}

int Canonizer::search(int level, const Partition& p) {
  if (p.cells == n_) return leaf(level, p);

  int target = 0;
  while ((p.cell[target] & (p.cell[target] - 1)) == 0) ++target;
  const VertexSet cell = p.cell[target];

  VertexSet explored = 0;
  std::array<std::uint8_t, kMaxOrder> uf;
  std::size_t uf_auts = static_cast<std::size_t>(-1);
  for (VertexSet s = cell; s; s &= s - 1) {
    const int v = std::countr_zero(s);
    if (explored && pruned(level, v, explored, uf, uf_auts)) continue;
    explored |= singleton(v);
    path_[level] = v;

    Partition child = p;
    for (int j = child.cells - 1; j > target; --j) child.cell[j + 1] = child.cell[j];
    child.cell[target] = singleton(v);
    child.cell[target + 1] = cell & ~singleton(v);
    ++child.cells;
    refine(child, singleton(v));

    const int jump = search(level + 1, child);
    if (jump < level) return jump;
  }
  return kNoJump;
}

int Canonizer::leaf(int level, const Partition& p) {
  std::array<int, kMaxOrder> lab;
  std::array<int, kMaxOrder> inv;
  for (int i = 0; i < n_; ++i) {
    lab[i] = std::countr_zero(p.cell[i]);
    inv[lab[i]] = i;
  }
  std::array<VertexSet, kMaxOrder> cert;
  for (int i = 0; i < n_; ++i) {
    VertexSet row = 0;
    for (VertexSet s = adj_[lab[i]]; s; s &= s - 1) row |= singleton(inv[std::countr_zero(s)]);
    cert[i] = row;
  }

  const auto bytes = static_cast<std::size_t>(n_) * sizeof(VertexSet);
  auto divergence = [&](const std::array<int, kMaxOrder>& other, int other_depth) {
    int d = 0;
    while (d < level && d < other_depth && path_[d] == other[d]) ++d;
    return d;
  };

  if (!have_first_) {
    have_first_ = true;
    first_depth_ = best_depth_ = level;
    first_path_ = best_path_ = path_;
    first_lab_ = best_lab_ = lab;
    first_cert_ = best_cert_ = cert;
    best_is_first_ = true;
    return kNoJump;
  }
  if (std::memcmp(cert.data(), first_cert_.data(), bytes) == 0) {
    add_automorphism(first_lab_, lab);
    return divergence(first_path_, first_depth_);
  }
  if (!best_is_first_ && std::memcmp(cert.data(), best_cert_.data(), bytes) == 0) {
    add_automorphism(best_lab_, lab);
    return divergence(best_path_, best_depth_);
  }
  if (std::lexicographical_compare(cert.begin(), cert.begin() + n_, best_cert_.begin(),
                                   best_cert_.begin() + n_)) {
    best_depth_ = level;
    best_path_ = path_;
    best_lab_ = lab;
    best_cert_ = cert;
    best_is_first_ = false;
  }
  return kNoJump;
}

void Canonizer::add_automorphism(const std::array<int, kMaxOrder>& from,
                                 const std::array<int, kMaxOrder>& to) {
  std::array<std::uint8_t, kMaxOrder> a{};
  for (int i = 0; i < n_; ++i) a[from[i]] = static_cast<std::uint8_t>(to[i]);
  auts_.push_back(a);
}

void Canonizer::compute_orbits() {
  std::array<std::uint8_t, kMaxOrder> uf;
  for (int i = 0; i < n_; ++i) uf[i] = static_cast<std::uint8_t>(i);
  for (const auto& a : auts_)
    for (int i = 0; i < n_; ++i)
      if (a[i] != i) unite(uf, i, a[i]);
  for (int i = 0; i < n_; ++i) orbit_[i] = find_root(uf, i);
}

std::uint64_t Canonizer::packed_certificate() const noexcept {
  std::uint64_t bits = 0;
  int pos = 0;
  for (int j = 1; j < n_; ++j)
    for (int i = 0; i < j; ++i, ++pos)
      if (contains(best_cert_[i], j)) bits |= std::uint64_t{1} << pos;
  return bits | (std::uint64_t{static_cast<unsigned>(n_)} << 58);
}

}  // namespace detail

namespace {

void check_canonical_order(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder)
    throw UnsupportedError("canonical labeling supports order <= " + std::to_string(kMaxCanonicalOrder) +
                           ", got " + std::to_string(g.order()));
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  check_canonical_order(g);
  detail::Canonizer c;
  c.run(g.order(), g.rows().data());
  CanonicalLabeling out;
  const int n = g.order();
  out.order.assign(c.best_order(), c.best_order() + n);
  for (std::size_t i = 0; i < c.generator_count(); ++i) {
    const auto& a = c.generator(i);
    out.generators.emplace_back(a.begin(), a.begin() + n);
  }
  out.orbit.resize(n);
  for (int v = 0; v < n; ++v) out.orbit[v] = c.orbit_min(v);
  return out;
}

Graph canonical_graph(const Graph& g) {
  check_canonical_order(g);
  detail::Canonizer c;
  c.run(g.order(), g.rows().data());
  return detail::make_graph_unchecked(g.order(), {c.best_rows(), static_cast<std::size_t>(g.order())});
}

CanonicalForm canonical_form(const Graph& g) { return CanonicalForm(graph6_encode(canonical_graph(g))); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_graph(a) == canonical_graph(b);
}

}  // namespace bst
