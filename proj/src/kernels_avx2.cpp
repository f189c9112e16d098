#include <algorithm>

#include "ocgw/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>
#endif

namespace ocgw::kernels {

#if defined(__AVX2__) && defined(__FMA__)

void caxpy_avx2(std::size_t n, cplx s, const cplx* x, cplx* y) {
  const __m256d sr = _mm256_set1_pd(s.real());
  const __m256d si = _mm256_set1_pd(s.imag());
  const double* xp = reinterpret_cast<const double*>(x);
  double* yp = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    __m256d xs = _mm256_permute_pd(xv, 0b0101);
    // (xr sr - xi si, xi sr + xr si)
    __m256d prod = _mm256_fmaddsub_pd(xv, sr, _mm256_mul_pd(xs, si));
    __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    _mm256_storeu_pd(yp + 2 * i, _mm256_add_pd(yv, prod));
  }
  if (i < n) caxpy_scalar(n - i, s, x + i, y + i);
}

void cconv_avx2(const cplx* a, std::size_t na, const cplx* b, std::size_t nb, cplx* out, std::size_t nout) {
  for (std::size_t i = 0; i < na && i < nout; ++i) {
    if (a[i] == cplx(0.0, 0.0)) continue;
    caxpy_avx2(std::min(nb, nout - i), a[i], b, out + i);
  }
}

#else

void caxpy_avx2(std::size_t n, cplx s, const cplx* x, cplx* y) { caxpy_scalar(n, s, x, y); }

void cconv_avx2(const cplx* a, std::size_t na, const cplx* b, std::size_t nb, cplx* out, std::size_t nout) {
  cconv_scalar(a, na, b, nb, out, nout);
}

#endif

}  // namespace ocgw::kernels
