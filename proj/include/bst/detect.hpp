#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bst/bound_report.hpp"
#include "bst/graph.hpp"

namespace bst {

// Exact detection of paths and cycles as (not necessarily induced) subgraphs.
// Two engines are provided for each query: a subset dynamic program over
// (visited set, endpoint) states, and a backtracking search. The dispatching
// entry points use the DP up to kSubsetDpMaxOrder vertices.

inline constexpr int kSubsetDpMaxOrder = 20;

enum class PatternKind { kPath, kCycle, kCycleAtLeast };

struct Pattern {
  PatternKind kind = PatternKind::kPath;
  int order = 2;

  /// "P5", "C6" or "C>=6".
  std::string to_string() const;
  friend bool operator==(const Pattern&, const Pattern&) = default;
};

/// A conjunction of forbidden patterns.
class ForbiddenSpec {
 public:
  ForbiddenSpec() = default;
  explicit ForbiddenSpec(std::vector<Pattern> patterns);

  /// Comma-separated tokens "P5", "C6", "C>=6", case-insensitive, blanks ignored.
  /// Throws DomainError on malformed tokens, paths of order < 2, cycles of order < 3.
  static ForbiddenSpec parse(std::string_view text);

  const std::vector<Pattern>& patterns() const noexcept { return patterns_; }
  std::string to_string() const;

  /// True if g contains none of the patterns.
  bool admits(const Graph& g) const;

  friend bool operator==(const ForbiddenSpec&, const ForbiddenSpec&) = default;

 private:
  std::vector<Pattern> patterns_;
};

bool contains_pattern(const Graph& g, const Pattern& p);

bool has_path(const Graph& g, int l);
bool has_path_dp(const Graph& g, int l);
bool has_path_dfs(const Graph& g, int l);

/// Order of a longest path; 1 for an edgeless graph.
int longest_path_order(const Graph& g);

bool has_cycle(const Graph& g, int l);
bool has_cycle_dp(const Graph& g, int l);
bool has_cycle_dfs(const Graph& g, int l);

/// Some cycle of order p with l <= p <= n.
bool has_cycle_at_least(const Graph& g, int l);

/// A path on exactly l vertices whose two ends both lie in `ends`.
bool has_path_with_ends_in(const Graph& g, VertexSet ends, int l);
bool has_path_with_ends_in_dp(const Graph& g, VertexSet ends, int l);
bool has_path_with_ends_in_dfs(const Graph& g, VertexSet ends, int l);

/// If e(G) > (l/2) n then G contains P_{l+2}. Reported as lhs = 2e(G) against
/// rhs = l*n, or rhs = +inf when the path is present.
BoundReport check_fact_erdos_gallai(const Graph& g, int l);

/// For connected G of order n > 3k:
///   e(G) >= e(S_{n,k})   => P_{2k+2} in G, unless G = S_{n,k};
///   e(G) >= e(S_{n,k}^+) => P_{2k+3} in G, unless G = S_{n,k}^+.
/// Each report has lhs = e(G) and rhs = threshold - 1, or +inf when escaped.
struct EdgeFactReports {
  BoundReport paths_2k2;
  BoundReport paths_2k3;
};

EdgeFactReports check_fact_f2_f3(const Graph& g, int k);

/// G is S_{n,k} (or S_{n,k}^+) up to isomorphism: canonical-form comparison
/// when the order allows it, structural recognition above that.
bool is_isomorphic_to_snk(const Graph& g, int k, bool plus);

}  // namespace bst
