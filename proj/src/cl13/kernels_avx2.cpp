// AVX2 variant of the Cl(1,3) product kernel.
//
// out[k] = sum_i sign(i, i^k) * a[i] * b[i^k]: for fixed i the source index
// map k -> i^k is an XOR permutation of b.  The low two bits of i permute
// within a 4-lane register (permute_pd / permute4x64_pd), the high two bits
// rename whole registers, so the 16 source vectors b[i^k] come from shuffles
// of four loads.  Accumulation runs i = 0..15 ascending with separate
// multiply and add roundings, matching product_scalar bit for bit.
//
// Compiled with -mavx2 -ffp-contract=off; callers must gate on
// product_avx2_supported().

#include "soliton/cl13/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <utility>

namespace sol::cl13 {

namespace {

template <int Lo>
inline __m256d xor_shuffle(__m256d v) noexcept {
  if constexpr (Lo == 0) return v;
  if constexpr (Lo == 1) return _mm256_permute_pd(v, 0b0101);   // [1,0,3,2]
  if constexpr (Lo == 2) return _mm256_permute4x64_pd(v, 0x4E); // [2,3,0,1]
  return _mm256_permute4x64_pd(v, 0x1B);                        // [3,2,1,0]
}

template <int I>
inline void accumulate_term(__m256d (&acc)[4], const __m256d (&b)[4], const double* a) noexcept {
  constexpr int hi = I >> 2;
  constexpr int lo = I & 3;
  const __m256d ai = _mm256_set1_pd(a[I]);
  const double* signs = detail::kSignByTarget.row[I];
  // Unrolled over the four output registers r: source register is b[r ^ hi].
  const __m256d s0 = _mm256_mul_pd(ai, _mm256_load_pd(signs + 0));
  const __m256d s1 = _mm256_mul_pd(ai, _mm256_load_pd(signs + 4));
  const __m256d s2 = _mm256_mul_pd(ai, _mm256_load_pd(signs + 8));
  const __m256d s3 = _mm256_mul_pd(ai, _mm256_load_pd(signs + 12));
  acc[0] = _mm256_add_pd(acc[0], _mm256_mul_pd(s0, xor_shuffle<lo>(b[0 ^ hi])));
  acc[1] = _mm256_add_pd(acc[1], _mm256_mul_pd(s1, xor_shuffle<lo>(b[1 ^ hi])));
  acc[2] = _mm256_add_pd(acc[2], _mm256_mul_pd(s2, xor_shuffle<lo>(b[2 ^ hi])));
  acc[3] = _mm256_add_pd(acc[3], _mm256_mul_pd(s3, xor_shuffle<lo>(b[3 ^ hi])));
}

template <int... Is>
inline void accumulate_all(__m256d (&acc)[4], const __m256d (&b)[4], const double* a,
                           std::integer_sequence<int, Is...>) noexcept {
  (accumulate_term<Is>(acc, b, a), ...);
}

} // namespace

bool product_avx2_supported() noexcept {
  return __builtin_cpu_supports("avx2") != 0;
}

void product_avx2(const double* a, const double* b, double* out) noexcept {
  const __m256d bv[4] = {_mm256_loadu_pd(b + 0), _mm256_loadu_pd(b + 4),
                         _mm256_loadu_pd(b + 8), _mm256_loadu_pd(b + 12)};
  __m256d acc[4] = {_mm256_setzero_pd(), _mm256_setzero_pd(), _mm256_setzero_pd(),
                    _mm256_setzero_pd()};
  accumulate_all(acc, bv, a, std::make_integer_sequence<int, kBladeCount>{});
  _mm256_storeu_pd(out + 0, acc[0]);
  _mm256_storeu_pd(out + 4, acc[1]);
  _mm256_storeu_pd(out + 8, acc[2]);
  _mm256_storeu_pd(out + 12, acc[3]);
}

} // namespace sol::cl13

#endif // x86_64
