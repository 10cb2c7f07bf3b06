// NEON variant of the Cl(1,3) product kernel (aarch64).
//
// Same XOR-permutation structure as the AVX2 kernel with 2-lane registers:
// bit 0 of i swaps within a register (ext), bits 1..3 rename registers.
// Separate multiply and add roundings in i-ascending order keep the result
// bit-identical to product_scalar.

#include "soliton/cl13/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <utility>

namespace sol::cl13 {

namespace {

template <int I>
inline void accumulate_term(float64x2_t (&acc)[8], const float64x2_t (&b)[8],
                            const double* a) noexcept {
  constexpr int hi = I >> 1;
  constexpr int lo = I & 1;
  const float64x2_t ai = vdupq_n_f64(a[I]);
  const double* signs = detail::kSignByTarget.row[I];
  for (int r = 0; r < 8; ++r) {
    float64x2_t src = b[r ^ hi];
    if constexpr (lo == 1) src = vextq_f64(src, src, 1); // lane swap
    const float64x2_t s = vmulq_f64(ai, vld1q_f64(signs + 2 * r));
    acc[r] = vaddq_f64(acc[r], vmulq_f64(s, src));
  }
}

template <int... Is>
inline void accumulate_all(float64x2_t (&acc)[8], const float64x2_t (&b)[8], const double* a,
                           std::integer_sequence<int, Is...>) noexcept {
  (accumulate_term<Is>(acc, b, a), ...);
}

} // namespace

void product_neon(const double* a, const double* b, double* out) noexcept {
  float64x2_t bv[8], acc[8];
  for (int r = 0; r < 8; ++r) {
    bv[r] = vld1q_f64(b + 2 * r);
    acc[r] = vdupq_n_f64(0.0);
  }
  accumulate_all(acc, bv, a, std::make_integer_sequence<int, kBladeCount>{});
  for (int r = 0; r < 8; ++r) vst1q_f64(out + 2 * r, acc[r]);
}

} // namespace sol::cl13

#endif // aarch64
