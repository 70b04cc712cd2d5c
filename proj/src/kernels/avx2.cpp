// Compiled with -mavx2 -mfma -ffp-contract=off; only reached after a runtime CPU check.
// Elementwise kernels must round exactly like the scalar ones.
#include <immintrin.h>

#include <cmath>

#include "bst/kernels.hpp"

namespace bst::kernels {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void shifted_matvec(const double* a, std::size_t stride, std::size_t n, const double* x, double shift,
                    double* y) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = a + i * stride;
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t j = 0; j < stride; j += 4)
      acc = _mm256_fmadd_pd(_mm256_loadu_pd(row + j), _mm256_loadu_pd(x + j), acc);
    y[i] = hsum(acc) + shift * x[i];
  }
}

double dot(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  double tail = 0.0;
  for (; i < n; ++i) tail += x[i] * y[i];
  return hsum(acc) + tail;
}

void scale(double* x, double s, std::size_t n) {
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(x + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), vs));
  for (; i < n; ++i) x[i] *= s;
}

double max_abs_residual(const double* y, const double* x, double c, std::size_t n) {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d m = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r = _mm256_sub_pd(_mm256_loadu_pd(y + i), _mm256_mul_pd(vc, _mm256_loadu_pd(x + i)));
    m = _mm256_max_pd(m, _mm256_andnot_pd(sign, r));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, m);
  double best = std::fmax(std::fmax(lanes[0], lanes[1]), std::fmax(lanes[2], lanes[3]));
  for (; i < n; ++i) best = std::fmax(best, std::fabs(y[i] - c * x[i]));
  return best;
}

}  // namespace

extern const KernelTable kAvx2Table;
const KernelTable kAvx2Table{Isa::kAvx2, shifted_matvec, dot, scale, max_abs_residual};

}  // namespace bst::kernels
