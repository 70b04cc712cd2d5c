#include "bst/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "bst/canonical.hpp"
#include "bst/error.hpp"

namespace bst {

namespace {

using Rows = std::array<VertexSet, kMaxOrder>;

Graph to_graph(const Rows& rows, int n) {
  return detail::make_graph_unchecked(n, std::span<const VertexSet>(rows.data(), static_cast<std::size_t>(n)));
}

// Canonical augmentation. A child H = G + v is accepted when v lies in the
// orbit of the vertex H itself designates: among the vertices maximising
// (degree, neighbour degree sum, triangles), the one earliest in canonical
// order. Isomorphic children of one parent are removed by certificate.
class Generator {
 public:
  Generator(int target, const EnumerationOptions& opts, std::function<void(const Graph&)> emit)
      : target_(target), opts_(opts), emit_(std::move(emit)) {}

  void run_from_root() {
    Rows root{};
    const Graph k1 = to_graph(root, 1);
    if (opts_.keep && !opts_.keep(k1)) {
      ++census_.pruned;
      return;
    }
    if (target_ == 1) {
      ++census_.generated;
      ++census_.emitted;
      emit_(k1);
      return;
    }
    expand(root, 1);
  }

  void expand(const Rows& g, int m) {
    std::array<int, kMaxOrder> deg{};
    int maxdeg = 0;
    for (int v = 0; v < m; ++v) {
      deg[v] = popcount(g[v]);
      maxdeg = std::max(maxdeg, deg[v]);
    }
    detail::Canonizer& parent = parent_canon_[m];
    parent.run(m, g.data());
    const bool rigid = parent.trivial_group();
    auto& seen = seen_[m];
    seen.clear();

    const int child = m + 1;
    Rows h{};
    const VertexSet subsets = VertexSet{1} << m;
    for (VertexSet s = 0; s < subsets; ++s) {
      const int sd = popcount(s);
      if (sd < maxdeg) continue;
      int hmax = sd;
      for (int v = 0; v < m; ++v) hmax = std::max(hmax, deg[v] + static_cast<int>((s >> v) & 1U));
      if (sd < hmax) continue;

      for (int v = 0; v < m; ++v) h[v] = g[v] | (((s >> v) & 1U) << m);
      h[m] = s;
      bool canonized = false;
      if (!accept(h, child, sd, canonized)) continue;
      if (!rigid) {
        if (!canonized) canon_.run(child, h.data());
        if (!seen.insert(canon_.packed_certificate()).second) continue;
      }

      if (opts_.keep) {
        if (!opts_.keep(to_graph(h, child))) {
          ++census_.pruned;
          continue;
        }
      }
      if (child == target_) {
        ++census_.generated;
        const Graph hg = to_graph(h, child);
        if (opts_.connected_only && !is_connected(hg)) continue;
        ++census_.emitted;
        emit_(hg);
      } else {
        expand(h, child);
      }
    }
  }

  const EnumerationCensus& census() const noexcept { return census_; }

 private:
  bool accept(const Rows& h, int n, int maxdeg, bool& canonized) {
    const int nv = n - 1;
    VertexSet top = 0;
    for (int v = 0; v < n; ++v)
      if (popcount(h[v]) == maxdeg) top |= singleton(v);
    if (top == singleton(nv)) return true;

    std::array<std::uint32_t, kMaxOrder> key{};
    std::uint32_t best = 0;
    for (VertexSet t = top; t; t &= t - 1) {
      const int v = std::countr_zero(t);
      std::uint32_t nds = 0;
      std::uint32_t tri = 0;
      for (VertexSet w = h[v]; w; w &= w - 1) {
        const int u = std::countr_zero(w);
        nds += static_cast<std::uint32_t>(popcount(h[u]));
        tri += static_cast<std::uint32_t>(popcount(h[u] & h[v]));
      }
      key[v] = nds << 12 | tri / 2;
      best = std::max(best, key[v]);
    }
    if (key[nv] != best) return false;
    VertexSet cands = 0;
    for (VertexSet t = top; t; t &= t - 1) {
      const int v = std::countr_zero(t);
      if (key[v] == best) cands |= singleton(v);
    }
    if (cands == singleton(nv)) return true;

    canon_.run(n, h.data());
    canonized = true;
    const int* order = canon_.best_order();
    for (int i = 0; i < n; ++i)
      if (contains(cands, order[i])) return canon_.orbit_min(order[i]) == canon_.orbit_min(nv);
    return false;
  }

  int target_;
  const EnumerationOptions& opts_;
  std::function<void(const Graph&)> emit_;
  EnumerationCensus census_;
  detail::Canonizer canon_;
  std::array<detail::Canonizer, kMaxEnumerationOrder + 1> parent_canon_;
  std::array<std::unordered_set<std::uint64_t>, kMaxEnumerationOrder + 1> seen_;
};

void check_enumeration_order(int n) {
  if (n < 1) throw DomainError("enumeration order must be positive");
  if (n > kMaxEnumerationOrder)
    throw UnsupportedError("enumeration supports order <= " + std::to_string(kMaxEnumerationOrder));
}

}  // namespace

EnumerationCensus enumerate_graphs(int n, const EnumerationOptions& opts, const GraphVisitor& visit) {
  check_enumeration_order(n);
  Generator gen(n, opts, visit);
  gen.run_from_root();
  return gen.census();
}

EnumerationCensus enumerate_graphs_parallel(int n, const EnumerationOptions& opts, int threads,
                                            const std::function<void(int, const Graph&)>& visit) {
  check_enumeration_order(n);
  if (threads < 1) throw DomainError("thread count must be at least 1");
  const int split = n - 3;
  if (threads == 1 || split < 2) return enumerate_graphs(n, opts, [&](const Graph& g) { visit(0, g); });

  std::vector<Rows> parents;
  EnumerationOptions head_opts{false, opts.keep};
  Generator head(split, head_opts, [&](const Graph& g) {
    Rows r{};
    std::copy(g.rows().begin(), g.rows().end(), r.begin());
    parents.push_back(r);
  });
  head.run_from_root();

  std::atomic<std::size_t> next{0};
  std::vector<EnumerationCensus> partial(static_cast<std::size_t>(threads));
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(threads));
  auto work = [&](int w) {
    try {
      Generator gen(n, opts, [&](const Graph& g) { visit(w, g); });
      for (std::size_t i = next++; i < parents.size(); i = next++) gen.expand(parents[i], split);
      partial[w] = gen.census();
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < threads; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);

  EnumerationCensus total;
  total.pruned = head.census().pruned;
  for (const auto& c : partial) {
    total.generated += c.generated;
    total.emitted += c.emitted;
    total.pruned += c.pruned;
  }
  return total;
}

std::uint64_t count_graphs(int n, bool connected_only) {
  return enumerate_graphs(n, {connected_only, {}}, [](const Graph&) {}).emitted;
}

}  // namespace bst
