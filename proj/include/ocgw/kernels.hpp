#pragma once

#include <complex>
#include <cstddef>

namespace ocgw::kernels {

using cplx = std::complex<double>;

// y[i] += s * x[i]
void caxpy_scalar(std::size_t n, cplx s, const cplx* x, cplx* y);
void caxpy_avx2(std::size_t n, cplx s, const cplx* x, cplx* y);

// out[k] += sum_{i+j=k} a[i] b[j] for k < nout
void cconv_scalar(const cplx* a, std::size_t na, const cplx* b, std::size_t nb, cplx* out, std::size_t nout);
void cconv_avx2(const cplx* a, std::size_t na, const cplx* b, std::size_t nb, cplx* out, std::size_t nout);

bool avx2_supported();
const char* active_variant();
// pins the scalar reference path (tests, reproducibility runs)
void force_scalar(bool on);

void caxpy(std::size_t n, cplx s, const cplx* x, cplx* y);
void cconv(const cplx* a, std::size_t na, const cplx* b, std::size_t nb, cplx* out, std::size_t nout);

}  // namespace ocgw::kernels
