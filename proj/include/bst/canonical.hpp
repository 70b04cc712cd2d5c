#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "bst/graph.hpp"

namespace bst {

/// Largest order accepted by the public canonical-labeling entry points.
inline constexpr int kMaxCanonicalOrder = 12;

/// Isomorphism-class identifier: the graph6 text of the canonically relabelled
/// graph. Equal forms <=> isomorphic graphs.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(std::string text) : text_(std::move(text)) {}

  const std::string& text() const noexcept { return text_; }

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

 private:
  std::string text_;
};

struct CanonicalLabeling {
  /// order[i] is the vertex of the input placed at canonical position i.
  std::vector<int> order;
  /// Generators of the automorphism group; gen[v] is the image of v.
  std::vector<std::vector<int>> generators;
  /// orbit[v] is the smallest vertex in v's automorphism orbit.
  std::vector<int> orbit;
};

CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
/// The input relabelled into canonical order.
Graph canonical_graph(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

namespace detail {

/// Individualization-refinement canonizer over raw adjacency rows. Works for
/// any order up to 64; cost is only practical for small or rigid graphs.
/// Reusable: `run` may be called repeatedly on one instance.
class Canonizer {
 public:
  void run(int n, const VertexSet* adj);

  int order() const noexcept { return n_; }
  /// best_order()[i] = input vertex at canonical position i.
  const int* best_order() const noexcept { return best_lab_.data(); }
  /// Adjacency rows of the canonically relabelled graph.
  const VertexSet* best_rows() const noexcept { return best_cert_.data(); }
  bool trivial_group() const noexcept { return auts_.empty(); }
  std::size_t generator_count() const noexcept { return auts_.size(); }
  const std::array<std::uint8_t, kMaxOrder>& generator(std::size_t i) const { return auts_[i]; }
  /// Smallest vertex in the orbit of v under the automorphism group.
  int orbit_min(int v) const noexcept { return orbit_[v]; }
  /// Upper triangle of the canonical adjacency packed into 64 bits (n <= 11).
  std::uint64_t packed_certificate() const noexcept;

 private:
  struct Partition {
    int cells = 0;
    std::array<VertexSet, kMaxOrder> cell{};
  };

  void refine(Partition& p, VertexSet first_splitter) const;
  int search(int level, const Partition& p);
  int leaf(int level, const Partition& p);
  bool pruned(int level, int v, VertexSet explored, std::array<std::uint8_t, kMaxOrder>& uf,
              std::size_t& uf_auts) const;
  void add_automorphism(const std::array<int, kMaxOrder>& from, const std::array<int, kMaxOrder>& to);
  void compute_orbits();

  int n_ = 0;
  const VertexSet* adj_ = nullptr;

  std::array<int, kMaxOrder> path_{};
  bool have_first_ = false;
  int first_depth_ = 0;
  std::array<int, kMaxOrder> first_path_{};
  std::array<int, kMaxOrder> first_lab_{};
  std::array<VertexSet, kMaxOrder> first_cert_{};
  int best_depth_ = 0;
  std::array<int, kMaxOrder> best_path_{};
  std::array<int, kMaxOrder> best_lab_{};
  std::array<VertexSet, kMaxOrder> best_cert_{};
  bool best_is_first_ = true;

  std::vector<std::array<std::uint8_t, kMaxOrder>> auts_;
  std::array<int, kMaxOrder> orbit_{};
};

}  // namespace detail

}  // namespace bst
