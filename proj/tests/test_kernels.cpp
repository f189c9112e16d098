#include "doctest.h"

#include <array>
#include <random>
#include <string>
#include <vector>

#include "ocgw/kernels.hpp"

using namespace ocgw::kernels;

namespace {
std::vector<cplx> rnd(std::mt19937& g, std::size_t n) {
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<cplx> v(n);
  for (auto& x : v) x = cplx(u(g), u(g));
  return v;
}
}  // namespace

TEST_CASE("caxpy: avx2 matches scalar") {
  std::mt19937 g(11);
  for (std::size_t n : {0u, 1u, 2u, 3u, 7u, 64u, 129u}) {
    auto x = rnd(g, n), y = rnd(g, n);
    auto y1 = y, y2 = y;
    cplx s(0.3, -1.7);
    caxpy_scalar(n, s, x.data(), y1.data());
    if (avx2_supported()) caxpy_avx2(n, s, x.data(), y2.data());
    else caxpy_scalar(n, s, x.data(), y2.data());
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(y1[i] - y2[i]) < 1e-15);
      CHECK(std::abs(y1[i] - (y[i] + s * x[i])) < 1e-15);
    }
  }
}

TEST_CASE("cconv: avx2 matches scalar and a naive loop") {
  std::mt19937 g(5);
  for (auto [na, nb, nout] : std::vector<std::array<std::size_t, 3>>{{1, 1, 1}, {5, 3, 7}, {17, 9, 12}, {33, 40, 80}}) {
    auto a = rnd(g, na), b = rnd(g, nb);
    std::vector<cplx> o1(nout), o2(nout), ref(nout);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j)
        if (i + j < nout) ref[i + j] += a[i] * b[j];
    cconv_scalar(a.data(), na, b.data(), nb, o1.data(), nout);
    if (avx2_supported()) cconv_avx2(a.data(), na, b.data(), nb, o2.data(), nout);
    else cconv_scalar(a.data(), na, b.data(), nb, o2.data(), nout);
    for (std::size_t k = 0; k < nout; ++k) {
      CHECK(std::abs(o1[k] - ref[k]) < 1e-13);
      CHECK(std::abs(o1[k] - o2[k]) < 1e-13);
    }
  }
}

TEST_CASE("dispatch can be pinned") {
  force_scalar(true);
  CHECK(std::string(active_variant()) == "scalar");
  force_scalar(false);
  CHECK(std::string(active_variant()) == (avx2_supported() ? "avx2" : "scalar"));
}
