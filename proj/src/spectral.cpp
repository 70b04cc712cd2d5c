#include "bst/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "bst/error.hpp"
#include "bst/kernels.hpp"

namespace bst {

namespace {

constexpr double kShift = 1.0;

struct ComponentEigen {
  double mu = 0.0;
  std::vector<double> x;  // indexed by position within the component
  long iterations = 0;
};

ComponentEigen power_iteration(const Graph& g, VertexSet comp, double tol) {
  const auto m = static_cast<std::size_t>(popcount(comp));
  const std::size_t stride = kernels::padded_stride(m);

  std::array<int, kMaxOrder> pos{};
  std::array<int, kMaxOrder> vert{};
  {
    int i = 0;
    for (VertexSet s = comp; s; s &= s - 1) {
      vert[i] = std::countr_zero(s);
      pos[vert[i]] = i;
      ++i;
    }
  }

  thread_local std::vector<double> a;
  thread_local std::vector<double> x;
  thread_local std::vector<double> y;
  a.assign(m * stride, 0.0);
  x.assign(stride, 0.0);
  y.assign(stride, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (VertexSet s = g.neighbors(vert[i]) & comp; s; s &= s - 1)
      a[i * stride + pos[std::countr_zero(s)]] = 1.0;

  const kernels::KernelTable& k = kernels::active();
  std::fill_n(x.begin(), m, 1.0 / std::sqrt(static_cast<double>(m)));

  const long cap = static_cast<long>(std::ceil(100.0 * static_cast<double>(m) * std::log(static_cast<double>(m) + 1.0)));
  double best = std::numeric_limits<double>::infinity();
  for (long it = 1; it <= cap; ++it) {
    k.shifted_matvec(a.data(), stride, m, x.data(), kShift, y.data());
    const double mu = k.dot(x.data(), y.data(), m) - kShift;
    const double res = k.max_abs_residual(y.data(), x.data(), mu + kShift, m);
    best = std::min(best, res);
    if (res <= tol) return {mu, std::vector<double>(x.begin(), x.begin() + static_cast<long>(m)), it};
    const double norm = std::sqrt(k.dot(y.data(), y.data(), m));
    k.scale(y.data(), 1.0 / norm, m);
    std::swap(x, y);
  }
  throw ConvergenceError("power iteration did not converge on a component of order " + std::to_string(m) +
                             " (best residual " + std::to_string(best) + ")",
                         best, cap);
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol) {
  if (!(tol > 0.0)) throw DomainError("eigen tolerance must be positive");
  const int n = g.order();
  SpectralResult out;
  out.vector.assign(n, 0.0);

  VertexSet chosen = 0;
  ComponentEigen best;
  bool any = false;
  for (VertexSet comp : components(g)) {
    if (popcount(comp) < 2) continue;
    ComponentEigen e = power_iteration(g, comp, tol);
    out.iterations += e.iterations;
    if (!any || e.mu > best.mu + tol) {
      best = std::move(e);
      chosen = comp;
      any = true;
    }
  }

  if (!any) {
    // Edgeless: every vector is an eigenvector of the zero matrix.
    out.vector[0] = 1.0;
    return out;
  }
  out.mu = best.mu;
  int i = 0;
  for (VertexSet s = chosen; s; s &= s - 1) out.vector[std::countr_zero(s)] = best.x[i++];

  double res = 0.0;
  for (int v = 0; v < n; ++v) {
    double acc = 0.0;
    for (VertexSet s = g.neighbors(v); s; s &= s - 1) acc += out.vector[std::countr_zero(s)];
    res = std::max(res, std::fabs(acc - out.mu * out.vector[v]));
  }
  out.residual = res;
  return out;
}

int min_entry_vertex(const SpectralResult& s) {
  if (s.vector.empty()) throw DomainError("empty eigenvector");
  const double m = *std::min_element(s.vector.begin(), s.vector.end());
  for (std::size_t i = 0; i < s.vector.size(); ++i)
    if (s.vector[i] <= m + 1e-12) return static_cast<int>(i);
  return 0;
}

double mu_snk_closed(int n, int k) {
  if (k < 1 || k >= n) throw DomainError("mu(S_{n,k}) requires 1 <= k < n");
  const double kd = k;
  return (kd - 1.0) / 2.0 + std::sqrt(kd * n - (3.0 * kd * kd + 2.0 * kd - 1.0) / 4.0);
}

double snk_plus_cubic(int n, int k, double x) {
  const double kd = k;
  const double nd = n;
  return ((x - kd) * x - (kd * nd - kd * kd - kd + 1.0)) * x + kd * (nd - kd - 2.0);
}

double mu_snk_plus(int n, int k) {
  if (k < 1 || k >= n - 1) throw DomainError("mu(S_{n,k}^+) requires 1 <= k < n - 1");
  double lo = mu_snk_closed(n, k);
  double hi = lo + 1.0;
  if (!(snk_plus_cubic(n, k, lo) < 0.0 && snk_plus_cubic(n, k, hi) > 0.0))
    throw Error("cubic for mu(S_{n,k}^+) does not change sign on [mu(S_{n,k}), mu(S_{n,k}) + 1] at n=" +
                std::to_string(n) + ", k=" + std::to_string(k));
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (snk_plus_cubic(n, k, mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

SnkPlusGap snk_plus_gap(int n, int k) {
  SnkPlusGap out;
  out.gap = mu_snk_plus(n, k) - mu_snk_closed(n, k);
  const double kd = k;
  const double nd = n;
  out.lower = 1.0 / (nd - kd + std::sqrt(kd * nd / 2.0));
  const double den = nd - kd - 2.0 * std::sqrt((nd - kd) / kd);
  out.upper = den == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / den;
  out.lower_holds = out.lower < out.gap;
  out.upper_holds = out.gap < out.upper;
  return out;
}

}  // namespace bst
