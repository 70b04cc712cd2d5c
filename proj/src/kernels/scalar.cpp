#include <cmath>

#include "bst/kernels.hpp"

namespace bst::kernels {

namespace {

void shifted_matvec(const double* a, std::size_t stride, std::size_t n, const double* x, double shift,
                    double* y) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = a + i * stride;
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
    y[i] = acc + shift * x[i];
  }
}

double dot(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void scale(double* x, double s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= s;
}

double max_abs_residual(const double* y, const double* x, double c, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::fmax(m, std::fabs(y[i] - c * x[i]));
  return m;
}

constexpr KernelTable kTable{Isa::kScalar, shifted_matvec, dot, scale, max_abs_residual};

}  // namespace

const KernelTable& scalar_table() noexcept { return kTable; }

}  // namespace bst::kernels
