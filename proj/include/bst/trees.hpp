#pragma once

#include <optional>
#include <vector>

#include "bst/graph.hpp"

namespace bst {

inline constexpr int kMaxTreeOrder = 10;

/// Rooted trees of order t as level sequences (root at level 0), in the
/// order produced by the level-sequence successor starting from the path.
std::vector<std::vector<int>> rooted_level_sequences(int t);

/// The tree encoded by a level sequence; vertex i is the i-th entry.
Graph tree_from_level_sequence(const std::vector<int>& levels);

/// One representative per isomorphism class of free trees of order t,
/// 1 <= t <= kMaxTreeOrder. Throws UnsupportedError above that.
const std::vector<Graph>& free_trees(int t);

/// True if `tree` embeds into g as a (not necessarily induced) subgraph.
bool contains_tree(const Graph& g, const Graph& tree);

struct TreeContainment {
  bool all = false;
  std::optional<Graph> missing;  // first tree of order t not contained in g
};

TreeContainment contains_all_trees(const Graph& g, int t);

}  // namespace bst
