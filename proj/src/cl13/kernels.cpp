#include "soliton/cl13/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace sol::cl13 {

// Reference kernel.  The i-ascending accumulation order per output
// coefficient is the contract every SIMD variant reproduces bit-exactly.
void product_scalar(const double* a, const double* b, double* out) noexcept {
  for (unsigned k = 0; k < kBladeCount; ++k) {
    double acc = 0.0;
    for (unsigned i = 0; i < kBladeCount; ++i)
      acc += (detail::kSignByTarget.row[i][k] * a[i]) * b[i ^ k];
    out[k] = acc;
  }
}

namespace {

ProductFn select_kernel() noexcept {
  const char* force = std::getenv("SOLITON_PRODUCT_KERNEL");
  const bool want_scalar = force && std::strcmp(force, "scalar") == 0;
#if defined(__x86_64__) || defined(_M_X64)
  if (!want_scalar && product_avx2_supported()) return product_avx2;
#elif defined(__aarch64__)
  if (!want_scalar) return product_neon;
#endif
  (void)want_scalar;
  return product_scalar;
}

} // namespace

ProductFn active_product_kernel() noexcept {
  static const ProductFn fn = select_kernel();
  return fn;
}

const char* active_product_kernel_name() noexcept {
  const ProductFn fn = active_product_kernel();
#if defined(__x86_64__) || defined(_M_X64)
  if (fn == product_avx2) return "avx2";
#elif defined(__aarch64__)
  if (fn == product_neon) return "neon";
#endif
  return "scalar";
}

} // namespace sol::cl13
