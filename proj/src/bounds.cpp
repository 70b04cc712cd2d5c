#include "bst/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bst/canonical.hpp"
#include "bst/detect.hpp"
#include "bst/error.hpp"

namespace bst {

BoundReport bound_min_degree(const Graph& g, double tol) {
  const double mu = spectral_radius(g, tol).mu;
  const double d = g.min_degree();
  const double m = g.edge_count();
  const double n = g.order();
  const double rhs = (d - 1.0) / 2.0 + std::sqrt(std::max(0.0, 2.0 * m - d * n + (d + 1.0) * (d + 1.0) / 4.0));
  return make_report("min_degree", mu, rhs);
}

BoundReport bound_edges(const Graph& g, double tol) {
  const double mu = spectral_radius(g, tol).mu;
  return make_report("edges", mu, -0.5 + std::sqrt(2.0 * g.edge_count() + 0.25));
}

BoundReport bound_edges_sqrt(const Graph& g, double tol) {
  const double mu = spectral_radius(g, tol).mu;
  return make_report("edges_sqrt", mu, std::sqrt(2.0 * g.edge_count()));
}

bool is_friendship_graph(const Graph& g) {
  const int n = g.order();
  if (n < 3 || n % 2 == 0) return false;
  if (g.edge_count() != 3 * (n - 1) / 2) return false;
  if (n <= kMaxCanonicalOrder) return canonical_form(g) == canonical_form(make_friendship((n - 1) / 2));
  return has_unique_common_neighbors(g);
}

C4FreeReport bound_c4free(const Graph& g, double tol) {
  if (g.order() >= 4 && has_cycle(g, 4)) throw DomainError("C_4 bound requires a C_4-free graph");
  const double mu = spectral_radius(g, tol).mu;
  C4FreeReport out;
  out.report = make_report("c4free", mu * mu - mu, g.order() - 1.0);
  out.tight = std::fabs(out.report.slack) <= kEqualityTolerance;
  out.friendship = is_friendship_graph(g);
  return out;
}

BoundReport lemma1_min_entry(const Graph& g, double tol) {
  const SpectralResult s = spectral_radius(g, tol);
  const double x = *std::min_element(s.vector.begin(), s.vector.end());
  if (g.order() == 1 || !is_connected(g)) return make_vacuous_report("lemma1", x, 0.0);
  const double d = g.min_degree();
  const double n = g.order();
  return make_report("lemma1", x, std::sqrt(d / (s.mu * s.mu + d * n - d * d)));
}

namespace {

struct DeletionInputs {
  double mu = 0.0;
  double xu = 0.0;
  double mu_minus = 0.0;
};

DeletionInputs deletion_inputs(const Graph& g, int u, double tol) {
  if (g.order() < 2) throw DomainError("vertex deletion requires n >= 2");
  if (u < 0 || u >= g.order()) throw DomainError("vertex " + std::to_string(u) + " out of range");
  const SpectralResult s = spectral_radius(g, tol);
  const double m = *std::min_element(s.vector.begin(), s.vector.end());
  if (s.vector[u] > m + 1e-12)
    throw DomainError("vertex " + std::to_string(u) + " does not attain the minimum eigenvector entry");
  return {s.mu, s.vector[u], spectral_radius(delete_vertex(g, u), tol).mu};
}

}  // namespace

BoundReport lemma2_deletion(const Graph& g, int u, double tol) {
  const DeletionInputs in = deletion_inputs(g, u, tol);
  const double x2 = in.xu * in.xu;
  return make_report("lemma2", in.mu * (1.0 - 2.0 * x2) / (1.0 - x2), in.mu_minus);
}

BoundReport lemma3_combined(const Graph& g, int u, double tol) {
  const DeletionInputs in = deletion_inputs(g, u, tol);
  const double d = g.min_degree();
  const double n = g.order();
  const double lhs = d == 0.0 ? in.mu : in.mu * (1.0 - 1.0 / (in.mu * in.mu / d + n - d - 1.0));
  return make_report("lemma3", lhs, in.mu_minus);
}

std::string to_string(DeletionStop s) {
  switch (s) {
    case DeletionStop::kSpectral: return "mu";
    case DeletionStop::kMinDegree: return "degree";
    case DeletionStop::kOrderFloor: return "order";
  }
  return "?";
}

DeletionTrace deletion_procedure(const Graph& g, int k, double tol) {
  const int n = g.order();
  if (n < 2) throw DomainError("deletion procedure requires n >= 2");
  if (k < 2) throw DomainError("deletion procedure requires k >= 2");
  const int floor_order = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n))));

  DeletionTrace trace;
  Graph cur = g;
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i;

  for (;;) {
    const SpectralResult s = spectral_radius(cur, tol);
    const int order = cur.order();
    if (s.mu > std::sqrt((2.0 * k + 1.0) * order)) {
      trace.stop = DeletionStop::kSpectral;
    } else if (cur.min_degree() > k - 1) {
      trace.stop = DeletionStop::kMinDegree;
    } else if (order <= floor_order) {
      trace.stop = DeletionStop::kOrderFloor;
    } else {
      const int u = min_entry_vertex(s);
      trace.steps.push_back({order, s.mu, s.vector[u], u, labels[u]});
      cur = delete_vertex(cur, u);
      labels.erase(labels.begin() + u);
      continue;
    }
    trace.terminal = cur;
    trace.terminal_mu = s.mu;
    trace.terminal_labels = labels;
    return trace;
  }
}

std::string to_string(Lev3Outcome o) {
  switch (o) {
    case Lev3Outcome::kPreconditionViolated: return "precondition-violated";
    case Lev3Outcome::kHolds: return "holds";
    case Lev3Outcome::kFails: return "fails";
  }
  return "?";
}

double lev3_target(double a, int k, int n, int i) {
  return (k - 1.0) / 2.0 + std::sqrt(static_cast<double>(k) * (n - i) - a + 0.5);
}

Lev3Check lemma_lev3_sequence_check(double a, int k, int n, int s, std::span<const double> x) {
  Lev3Check out;
  if (k < 2) {
    out.detail = "k >= 2 required";
  } else if (s < 1) {
    out.detail = "s >= 1 required";
  } else if (static_cast<double>(n) - s < 4.0 * k * k * k + 4.0 * std::fabs(a) * (k - 1)) {
    out.detail = "n - s >= 4k^3 + 4|a|(k-1) required";
  } else if (x.size() != static_cast<std::size_t>(s) + 1) {
    out.detail = "sequence must have s + 1 terms";
  } else {
    out.outcome = Lev3Outcome::kHolds;
    for (int i = 1; i <= s; ++i) {
      if (!(x[i] >= lev3_target(a, k, n, i))) {
        out.outcome = Lev3Outcome::kFails;
        out.first_failure = i;
        out.detail = "x_" + std::to_string(i) + " below target";
        break;
      }
    }
  }
  return out;
}

std::vector<double> lev3_extremal_sequence(double a, int k, int n, int s) {
  if (k < 2 || s < 0) throw DomainError("sequence requires k >= 2 and s >= 0");
  std::vector<double> x(static_cast<std::size_t>(s) + 1);
  x[0] = (k - 1.0) / 2.0 + std::sqrt(static_cast<double>(k) * n - a);
  for (int i = 0; i < s; ++i) x[i + 1] = x[i] * (1.0 - 1.0 / (x[i] * x[i] / (k - 1.0) + n - i - k));
  return x;
}

std::vector<BoundReport> all_bounds(const Graph& g, double tol) {
  std::vector<BoundReport> out;
  out.push_back(bound_edges(g, tol));
  out.push_back(bound_edges_sqrt(g, tol));
  out.push_back(bound_min_degree(g, tol));
  if (g.order() < 4 || !has_cycle(g, 4)) out.push_back(bound_c4free(g, tol).report);
  out.push_back(lemma1_min_entry(g, tol));
  if (g.order() >= 2) {
    const int u = min_entry_vertex(spectral_radius(g, tol));
    out.push_back(lemma2_deletion(g, u, tol));
    out.push_back(lemma3_combined(g, u, tol));
  }
  return out;
}

}  // namespace bst
