#pragma once

#include <cstdint>
#include <functional>

#include "bst/graph.hpp"

namespace bst {

/// Orderly generation of unlabelled graphs by canonical vertex augmentation.
/// Every isomorphism class of order n is produced exactly once, in a fixed
/// order that depends only on n and the options.

inline constexpr int kMaxEnumerationOrder = 10;

/// Property closed under taking subgraphs. Returning false for a graph of
/// order m < n discards every extension of it.
using HereditaryFilter = std::function<bool(const Graph&)>;

struct EnumerationOptions {
  bool connected_only = false;
  /// When set, only graphs all of whose generation ancestors (and the graph
  /// itself) satisfy the filter are produced.
  HereditaryFilter keep;
};

struct EnumerationCensus {
  std::uint64_t generated = 0;  // classes of order n reached
  std::uint64_t emitted = 0;    // passed to the visitor
  std::uint64_t pruned = 0;     // accepted extensions rejected by the filter
};

using GraphVisitor = std::function<void(const Graph&)>;

/// Throws UnsupportedError for n > kMaxEnumerationOrder, DomainError for n < 1.
EnumerationCensus enumerate_graphs(int n, const EnumerationOptions& opts, const GraphVisitor& visit);

/// Same classes, split over `threads` workers. The visitor receives the
/// worker index and may be called concurrently from different workers; the
/// order of calls is not deterministic.
EnumerationCensus enumerate_graphs_parallel(int n, const EnumerationOptions& opts, int threads,
                                            const std::function<void(int, const Graph&)>& visit);

/// Number of isomorphism classes of order n (connected only if requested).
std::uint64_t count_graphs(int n, bool connected_only);

}  // namespace bst
