#pragma once

#include <vector>

#include "bst/graph.hpp"

namespace bst {

inline constexpr double kDefaultEigenTolerance = 1e-10;

/// Dominant adjacency eigenpair of a graph.
struct SpectralResult {
  double mu = 0.0;
  /// Unit eigenvector for mu. For a disconnected graph it is supported on the
  /// first component (lowest vertex) attaining mu and is zero elsewhere.
  std::vector<double> vector;
  /// ||A x - mu x||_inf over the whole graph.
  double residual = 0.0;
  long iterations = 0;
};

/// Shifted power iteration on A + I per connected component, starting from
/// the uniform vector, stopping when the residual drops to `tol`.
/// Throws ConvergenceError after 100 * n * ln(n + 1) iterations on a component.
SpectralResult spectral_radius(const Graph& g, double tol = kDefaultEigenTolerance);

/// Lowest-index vertex whose eigenvector entry is within 1e-12 of the minimum.
int min_entry_vertex(const SpectralResult& s);

/// mu(S_{n,k}) = (k-1)/2 + sqrt(kn - (3k^2 + 2k - 1)/4), for 1 <= k < n.
double mu_snk_closed(int n, int k);

/// mu(S_{n,k}^+): largest root of x^3 - k x^2 - (kn - k^2 - k + 1) x + k(n - k - 2),
/// located by bisection on [mu(S_{n,k}), mu(S_{n,k}) + 1]. Requires 1 <= k < n - 1.
/// Throws Error if the cubic does not change sign across that bracket.
double mu_snk_plus(int n, int k);

/// The cubic whose largest root is mu(S_{n,k}^+).
double snk_plus_cubic(int n, int k, double x);

/// Two-sided estimate of mu(S_{n,k}^+) - mu(S_{n,k}):
///   1/(n - k + sqrt(kn/2)) < gap < 1/(n - k - 2 sqrt((n-k)/k)).
/// The upper expression is evaluated literally; a zero denominator gives +inf.
struct SnkPlusGap {
  double gap = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool lower_holds = false;
  bool upper_holds = false;
};

SnkPlusGap snk_plus_gap(int n, int k);

}  // namespace bst
