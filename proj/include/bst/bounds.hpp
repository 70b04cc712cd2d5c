#pragma once

#include <span>
#include <string>
#include <vector>

#include "bst/bound_report.hpp"
#include "bst/graph.hpp"
#include "bst/spectral.hpp"

namespace bst {

/// mu <= (d-1)/2 + sqrt(2m - d n + (d+1)^2/4), d the minimum degree.
BoundReport bound_min_degree(const Graph& g, double tol = kDefaultEigenTolerance);

/// mu <= -1/2 + sqrt(2m + 1/4).
BoundReport bound_edges(const Graph& g, double tol = kDefaultEigenTolerance);

/// mu <= sqrt(2m).
BoundReport bound_edges_sqrt(const Graph& g, double tol = kDefaultEigenTolerance);

struct C4FreeReport {
  BoundReport report;  // lhs = mu^2 - mu, rhs = n - 1
  bool tight = false;  // |lhs - rhs| <= 1e-8
  bool friendship = false;
};

inline constexpr double kEqualityTolerance = 1e-8;

/// Throws DomainError if g contains a C_4.
C4FreeReport bound_c4free(const Graph& g, double tol = kDefaultEigenTolerance);

/// True if g is a friendship graph (t >= 1 triangles sharing a vertex).
bool is_friendship_graph(const Graph& g);

/// Smallest entry of the principal unit eigenvector against
/// sqrt(d / (mu^2 + d n - d^2)). Vacuous for disconnected graphs and n = 1.
BoundReport lemma1_min_entry(const Graph& g, double tol = kDefaultEigenTolerance);

/// mu (1 - 2x_u^2) / (1 - x_u^2) <= mu(G - u).
/// u must attain the minimum eigenvector entry. Throws DomainError for n = 1
/// or when u is not a minimum-entry vertex.
BoundReport lemma2_deletion(const Graph& g, int u, double tol = kDefaultEigenTolerance);

/// mu (1 - 1/(mu^2/d + n - d - 1)) <= mu(G - u), d the minimum degree of G.
/// Same preconditions as lemma2_deletion. With d = 0 the left side is mu.
BoundReport lemma3_combined(const Graph& g, int u, double tol = kDefaultEigenTolerance);

enum class DeletionStop { kSpectral, kMinDegree, kOrderFloor };

std::string to_string(DeletionStop s);

struct DeletionStep {
  int order = 0;  // |G_r| before the deletion
  double mu = 0.0;
  double min_entry = 0.0;
  int deleted = 0;  // index within G_r
  int label = 0;    // index within the input graph
};

struct DeletionTrace {
  std::vector<DeletionStep> steps;
  DeletionStop stop = DeletionStop::kSpectral;
  Graph terminal;
  double terminal_mu = 0.0;
  std::vector<int> terminal_labels;  // input-graph label of each terminal vertex
};

/// Deletes minimum-entry vertices while mu(G_r) <= sqrt((2k+1)|G_r|),
/// delta(G_r) <= k-1 and |G_r| > floor(sqrt(n)). Requires n >= 2, k >= 2.
DeletionTrace deletion_procedure(const Graph& g, int k, double tol = kDefaultEigenTolerance);

enum class Lev3Outcome { kPreconditionViolated, kHolds, kFails };

std::string to_string(Lev3Outcome o);

struct Lev3Check {
  Lev3Outcome outcome = Lev3Outcome::kPreconditionViolated;
  int first_failure = -1;  // index i of the first x_i below target
  std::string detail;
};

/// Target (k-1)/2 + sqrt(k(n-i) - a + 1/2).
double lev3_target(double a, int k, int n, int i);

/// Checks k >= 2, s >= 1, n - s >= 4k^3 + 4|a|(k-1) and |x| = s + 1, then
/// whether x_i >= lev3_target(a, k, n, i) for i = 1..s.
Lev3Check lemma_lev3_sequence_check(double a, int k, int n, int s, std::span<const double> x);

/// x_0 = (k-1)/2 + sqrt(kn - a) and x_{i+1} = x_i (1 - 1/(x_i^2/(k-1) + n - i - k)).
std::vector<double> lev3_extremal_sequence(double a, int k, int n, int s);

/// Every report applicable to g: edge bounds, the minimum-degree bound, the
/// C_4 bound when g is C_4-free, and the eigenvector lemmas when n >= 2.
std::vector<BoundReport> all_bounds(const Graph& g, double tol = kDefaultEigenTolerance);

}  // namespace bst
