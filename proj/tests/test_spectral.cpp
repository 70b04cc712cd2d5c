#include <doctest.h>

#include <cmath>
#include <numeric>

#include "bst/error.hpp"
#include "bst/spectral.hpp"
#include "oracles.hpp"

using namespace bst;

namespace {

double norm2(const std::vector<double>& v) { return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0)); }

void check_invariants(const Graph& g, const SpectralResult& s) {
  CHECK(norm2(s.vector) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.residual <= 1e-9);
  CHECK(s.mu >= 2.0 * g.edge_count() / g.order() - 1e-9);
  CHECK(s.mu <= g.order() - 1 + 1e-9);
  if (is_connected(g))
    for (double x : s.vector) CHECK(x >= 0.0);
}

}  // namespace

TEST_CASE("closed spectra of standard graphs") {
  for (int n = 2; n <= 20; ++n) {
    CHECK(spectral_radius(make_complete(n)).mu == doctest::Approx(n - 1.0).epsilon(1e-10));
    CHECK(spectral_radius(make_star(n)).mu == doctest::Approx(std::sqrt(n - 1.0)).epsilon(1e-10));
  }
  CHECK(spectral_radius(make_petersen()).mu == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(spectral_radius(make_cycle(5)).mu == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(spectral_radius(make_complete_bipartite(3, 5)).mu == doctest::Approx(std::sqrt(15.0)).epsilon(1e-10));
}

TEST_CASE("edgeless and single-vertex graphs") {
  const SpectralResult s = spectral_radius(Graph::empty(4));
  CHECK(s.mu == 0.0);
  CHECK(s.vector == std::vector<double>{1.0, 0.0, 0.0, 0.0});
  CHECK(spectral_radius(Graph()).mu == 0.0);
}

TEST_CASE("disconnected graphs: maximum over components, eigenvector on one component") {
  // K_3 on {3,4,5} and an edge {0,1}, isolated 2.
  const std::array<std::pair<int, int>, 4> e{{{0, 1}, {3, 4}, {4, 5}, {3, 5}}};
  const Graph g = Graph::from_edges(6, e);
  const SpectralResult s = spectral_radius(g);
  CHECK(s.mu == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(s.vector[0] == 0.0);
  CHECK(s.vector[2] == 0.0);
  CHECK(s.vector[3] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-9));
  check_invariants(g, s);

  // Two copies of K_3: the lower one carries the vector.
  const std::array<std::pair<int, int>, 6> twin{{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}};
  const SpectralResult t = spectral_radius(Graph::from_edges(6, twin));
  CHECK(t.vector[0] > 0.5);
  CHECK(t.vector[3] == 0.0);
}

TEST_CASE("power iteration matches the characteristic-polynomial oracle on all graphs of order <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : oracle::all_graphs(n)) {
      const SpectralResult s = spectral_radius(g);
      CHECK(s.mu == doctest::Approx(oracle::charpoly_spectral_radius(g)).epsilon(1e-8));
      check_invariants(g, s);
    }
}

TEST_CASE("power iteration matches the Jacobi oracle on random graphs") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 40; ++rep) {
    const int n = 2 + rep % 40;
    const Graph g = oracle::random_graph(rng, n, 0.15 + 0.02 * (rep % 10));
    const SpectralResult s = spectral_radius(g);
    CHECK(s.mu == doctest::Approx(oracle::jacobi_spectral_radius(g)).epsilon(1e-9));
    check_invariants(g, s);
  }
}

TEST_CASE("closed form for mu(S_{n,k})") {
  CHECK(mu_snk_closed(5, 1) == doctest::Approx(2.0).epsilon(1e-15));
  for (int n = 2; n <= 30; ++n) CHECK(mu_snk_closed(n, 1) == doctest::Approx(std::sqrt(n - 1.0)).epsilon(1e-14));
  CHECK(std::fabs(mu_snk_closed(50, 3) - spectral_radius(make_snk(50, 3, false)).mu) <= 1e-9);
  CHECK(std::fabs(mu_snk_closed(50, 3) - oracle::jacobi_spectral_radius(make_snk(50, 3, false))) <= 1e-9);
  CHECK_THROWS_AS(mu_snk_closed(5, 5), DomainError);
  CHECK_THROWS_AS(mu_snk_closed(5, 0), DomainError);
}

TEST_CASE("cubic for mu(S_{n,k}^+)") {
  // (6,1): x^3 - x^2 - 5x + 3
  const double r = mu_snk_plus(6, 1);
  CHECK(std::fabs(r * r * r - r * r - 5 * r + 3) < 1e-12);
  CHECK(std::fabs(r - oracle::charpoly_spectral_radius(make_snk(6, 1, true))) <= 1e-9);
  CHECK(std::fabs(r - spectral_radius(make_snk(6, 1, true)).mu) <= 1e-9);
  CHECK(snk_plus_cubic(6, 1, 0.0) == 3.0);

  // (100,2): the gap is about 1/n.
  const double gap = mu_snk_plus(100, 2) - mu_snk_closed(100, 2);
  CHECK(std::fabs(gap - 0.01) < 5.0 * std::pow(100.0, -1.5));

  CHECK_THROWS_AS(mu_snk_plus(5, 4), DomainError);
}

TEST_CASE("two-sided gap estimate") {
  for (int n = 6; n <= 60; ++n)
    for (int k = 1; k < n - 1; ++k) {
      const SnkPlusGap g = snk_plus_gap(n, k);
      CHECK(g.lower_holds);
      CHECK(g.upper_holds);
    }
  // Where n - k - 2 sqrt((n-k)/k) < 0 the upper expression is negative and fails.
  CHECK_FALSE(snk_plus_gap(3, 1).upper_holds);
  CHECK_FALSE(snk_plus_gap(4, 1).upper_holds);
  CHECK(snk_plus_gap(3, 1).lower_holds);
  // Zero denominator reads as +inf.
  CHECK(std::isinf(snk_plus_gap(5, 1).upper));
  CHECK(snk_plus_gap(5, 1).upper_holds);
}

TEST_CASE("deleting a vertex never raises the spectral radius") {
  std::mt19937_64 rng(32);
  for (int rep = 0; rep < 30; ++rep) {
    const Graph g = oracle::random_graph(rng, 3 + rep % 12, 0.4);
    const double mu = spectral_radius(g).mu;
    for (int u = 0; u < g.order(); ++u) CHECK(spectral_radius(delete_vertex(g, u)).mu <= mu + 1e-9);
  }
}

TEST_CASE("tolerance validation and non-convergence") {
  CHECK_THROWS_AS(spectral_radius(make_cycle(5), 0.0), DomainError);
  try {
    spectral_radius(make_snk(9, 2, true), 1e-300);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.best_residual() < 1e-10);
    CHECK(e.iterations() > 0);
  }
}
