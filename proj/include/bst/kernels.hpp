#pragma once

#include <cstddef>
#include <optional>

// Dense double-precision kernels behind the power iteration. Every kernel has
// a portable scalar reference and, on x86-64, an AVX2/FMA variant selected at
// runtime. The two must agree to rounding; tests/test_kernels.cpp holds them
// to that.

namespace bst::kernels {

enum class Isa { kScalar, kAvx2 };

const char* to_string(Isa isa) noexcept;

/// Row stride used for padded dense matrices: n rounded up to a multiple of 4.
constexpr std::size_t padded_stride(std::size_t n) noexcept { return (n + 3) & ~std::size_t{3}; }

struct KernelTable {
  Isa isa;
  /// y[i] = sum_j a[i*stride + j] * x[j] + shift * x[i] for i < n.
  /// `a` rows and `x` must be zero-padded out to `stride`.
  void (*shifted_matvec)(const double* a, std::size_t stride, std::size_t n, const double* x, double shift,
                         double* y);
  double (*dot)(const double* x, const double* y, std::size_t n);
  void (*scale)(double* x, double s, std::size_t n);
  /// max_i |y[i] - c * x[i]|.
  double (*max_abs_residual)(const double* y, const double* x, double c, std::size_t n);
};

const KernelTable& scalar_table() noexcept;

/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2/FMA.
const KernelTable* avx2_table() noexcept;

/// Table used by the eigensolver. Chosen once from the CPU and the BST_KERNELS
/// environment variable (scalar | avx2 | auto), unless overridden.
const KernelTable& active() noexcept;

/// Forces a specific variant (nullopt restores automatic selection). Throws
/// DomainError if the requested variant is unavailable.
void force_isa(std::optional<Isa> isa);

}  // namespace bst::kernels
