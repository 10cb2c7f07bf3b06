#pragma once

// Dense Cl(1,3) geometric-product kernels.
//
// A multivector is 16 doubles indexed by blade bitmask b (bit mu set <=>
// generator gamma_mu present, factors in ascending index order).  The product
// of basis blades is
//
//     blade(i) * blade(j) = blade_sign(i, j) * blade(i ^ j)
//
// so coefficient k of a*b accumulates, for i = 0..15 ascending,
//
//     out[k] += (sign(i, i^k) * a[i]) * b[i ^ k]
//
// All kernels (scalar, AVX2, NEON) follow exactly this accumulation order
// with one multiply rounding and one add rounding per term (floating-point
// contraction disabled in the kernel translation units), so every variant
// produces bit-identical output and the runtime dispatch is transparent.
// Equivalence tests assert exact equality, not a tolerance.

#include <array>
#include <bit>
#include <cstddef>

namespace sol::cl13 {

inline constexpr int kBladeCount = 16;

/// Metric signature diag(+1,-1,-1,-1): square of generator mu.
constexpr int metric_sign(int mu) { return mu == 0 ? 1 : -1; }

/// Sign of blade(a)*blade(b): transposition count to interleave the factor
/// lists plus one metric factor per shared generator.  Always +1 or -1.
constexpr int blade_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
  int sign = (swaps & 1) ? -1 : 1;
  // Shared spatial generators each contribute eta_ii = -1.
  if (std::popcount(a & b & 0b1110u) & 1) sign = -sign;
  return sign;
}

constexpr unsigned blade_index(unsigned a, unsigned b) { return a ^ b; }

namespace detail {
// kSignByTarget[i][k] = blade_sign(i, i ^ k): the sign with which a[i]*b[i^k]
// enters output coefficient k.  Rows are 32-byte aligned for vector loads.
struct alignas(32) SignTable {
  double row[kBladeCount][kBladeCount];
};

constexpr SignTable make_sign_table() {
  SignTable t{};
  for (unsigned i = 0; i < kBladeCount; ++i)
    for (unsigned k = 0; k < kBladeCount; ++k)
      t.row[i][k] = static_cast<double>(blade_sign(i, i ^ k));
  return t;
}

inline constexpr SignTable kSignByTarget = make_sign_table();
} // namespace detail

// Kernels.  `out` must not alias `a` or `b`.
void product_scalar(const double* a, const double* b, double* out) noexcept;

#if defined(__x86_64__) || defined(_M_X64)
bool product_avx2_supported() noexcept;
void product_avx2(const double* a, const double* b, double* out) noexcept;
#endif

#if defined(__aarch64__)
void product_neon(const double* a, const double* b, double* out) noexcept;
#endif

using ProductFn = void (*)(const double*, const double*, double*) noexcept;

/// Kernel chosen at startup: best ISA variant the CPU supports, overridable
/// with SOLITON_PRODUCT_KERNEL=scalar|avx2|neon (falls back if unsupported).
ProductFn active_product_kernel() noexcept;
const char* active_product_kernel_name() noexcept;

} // namespace sol::cl13
