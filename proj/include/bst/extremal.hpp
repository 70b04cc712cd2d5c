#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bst/canonical.hpp"
#include "bst/detect.hpp"
#include "bst/spectral.hpp"

namespace bst {

/// Graphs within this distance of the maximum are all reported as witnesses.
inline constexpr double kWitnessTolerance = 1e-9;

struct SearchConfig {
  double tol = kDefaultEigenTolerance;
  int threads = 1;
  /// Skip every extension of a graph that already violates the property
  /// being searched (exact, since the properties are subgraph-closed).
  bool hereditary = true;
};

/// Maximum spectral radius over graphs of order n containing none of the
/// patterns in `spec`.
struct ExtremalRecord {
  int n = 0;
  ForbiddenSpec spec;
  bool connected_only = false;
  double max_mu = 0.0;
  std::vector<CanonicalForm> witnesses;  // sorted
  std::uint64_t enumerated = 0;  // classes reached by the generator
  std::uint64_t admissible = 0;  // of those, avoiding every pattern
  std::uint64_t pruned = 0;      // subtrees skipped by the hereditary filter

  friend bool operator==(const ExtremalRecord&, const ExtremalRecord&) = default;
};

ExtremalRecord extremal_mu(int n, const ForbiddenSpec& spec, bool connected_only, const SearchConfig& cfg = {});

enum class ClaimId { kTh1a, kTh1b, kTh2, kTh3, kConj1a, kConj1b, kConj2a, kConj2b };

std::string to_string(ClaimId c);
std::optional<ClaimId> parse_claim(std::string_view text);

enum class Outcome {
  kVerified,        // every graph meeting the threshold has the property or is the exception
  kVacuous,         // no order in the range where the statement is defined
  kCounterexample,  // a violation where the statement's hypotheses hold
  kSmallNException  // a violation outside the statement's order hypothesis
};

std::string to_string(Outcome o);

struct Violation {
  std::string graph6;  // canonical form
  int n = 0;
  double mu = 0.0;
  double threshold = 0.0;
  bool applicable = false;  // the statement's order hypothesis holds at n
};

struct ClaimPoint {
  int n = 0;
  double threshold = 0.0;
  bool applicable = false;
  std::uint64_t enumerated = 0;
  std::uint64_t above = 0;   // graphs lacking the property with mu meeting the threshold
  std::uint64_t escapes = 0; // of those, the excepted extremal graph
  std::uint64_t violations = 0;
};

struct ClaimVerdict {
  ClaimId claim = ClaimId::kTh1a;
  int k = 1;
  int n_from = 0;
  int n_to = 0;
  bool connected_only = false;
  Outcome outcome = Outcome::kVerified;
  std::vector<ClaimPoint> points;
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  /// A theorem without order hypothesis was contradicted.
  bool alarming() const noexcept { return outcome == Outcome::kCounterexample; }
};

/// Threshold comparisons: "mu >= t" is tested as mu >= t - 1e-9 and
/// "mu > t" as mu > t + 1e-9.
inline constexpr double kThresholdSlack = 1e-9;

ClaimVerdict verify_theorem1(int k, bool part_b, int n_from, int n_to, bool connected_only = false,
                             const SearchConfig& cfg = {});
ClaimVerdict verify_theorem2(int k, int n_from, int n_to, bool connected_only = false, const SearchConfig& cfg = {});
ClaimVerdict verify_theorem3(int k, int n_from, int n_to, bool connected_only = false, const SearchConfig& cfg = {});
ClaimVerdict scan_conjecture1(int k, bool part_b, int n_from, int n_to, bool connected_only = false,
                              const SearchConfig& cfg = {});
ClaimVerdict scan_conjecture2(int k, bool part_b, int n_from, int n_to, bool connected_only = false,
                              const SearchConfig& cfg = {});

ClaimVerdict verify_claim(ClaimId id, int k, int n_from, int n_to, bool connected_only = false,
                          const SearchConfig& cfg = {});

/// k/2 + sqrt(kn + (k^2 - 4k)/4).
double theorem2_threshold(int n, int k);
/// (k-1)/2 + sqrt(kn + (k+1)^2/4).
double theorem3_threshold(int n, int k);

/// Both readings of g_l(n): forbidding {C_l, C_{l+1}} and forbidding every
/// C_p with p >= l.
struct GVariantComparison {
  ExtremalRecord strict;
  ExtremalRecord relaxed;
  bool agree = false;  // maxima within kWitnessTolerance
};

GVariantComparison compare_g_variants(int n, int l, bool connected_only, const SearchConfig& cfg = {});

/// Asymptotic windows for a closed-form value at (n, k):
///   cycle window [(k-1)/2 + sqrt(kn), k/2 + sqrt(kn)];
///   even-g estimate (k-1)/2 + sqrt(kn).
struct SandwichPosition {
  double value = 0.0;
  double lower = 0.0;  // (k-1)/2 + sqrt(kn)
  double upper = 0.0;  // k/2 + sqrt(kn)
  double offset = 0.0; // value - lower
};

SandwichPosition sandwich_position(double value, int n, int k);

}  // namespace bst
