#include "ocgw/kernels.hpp"

#include <algorithm>
#include <atomic>

namespace ocgw::kernels {

namespace {
std::atomic<bool> g_force_scalar{false};

bool detect_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}
}  // namespace

void caxpy_scalar(std::size_t n, cplx s, const cplx* x, cplx* y) {
  const double sr = s.real(), si = s.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] = cplx(y[i].real() + (xr * sr - xi * si), y[i].imag() + (xr * si + xi * sr));
  }
}

void cconv_scalar(const cplx* a, std::size_t na, const cplx* b, std::size_t nb, cplx* out, std::size_t nout) {
  for (std::size_t i = 0; i < na && i < nout; ++i) {
    if (a[i] == cplx(0.0, 0.0)) continue;
    caxpy_scalar(std::min(nb, nout - i), a[i], b, out + i);
  }
}

bool avx2_supported() {
  static const bool ok = detect_avx2();
  return ok;
}

const char* active_variant() { return (avx2_supported() && !g_force_scalar.load()) ? "avx2" : "scalar"; }

void force_scalar(bool on) { g_force_scalar.store(on); }

void caxpy(std::size_t n, cplx s, const cplx* x, cplx* y) {
  if (avx2_supported() && !g_force_scalar.load(std::memory_order_relaxed))
    caxpy_avx2(n, s, x, y);
  else
    caxpy_scalar(n, s, x, y);
}

void cconv(const cplx* a, std::size_t na, const cplx* b, std::size_t nb, cplx* out, std::size_t nout) {
  if (avx2_supported() && !g_force_scalar.load(std::memory_order_relaxed))
    cconv_avx2(a, na, b, nb, out, nout);
  else
    cconv_scalar(a, na, b, nb, out, nout);
}

}  // namespace ocgw::kernels
