#include "doctest.h"

#include <cmath>

#include "ocgw/amodel.hpp"
#include "ocgw/checks.hpp"

using namespace ocgw;

namespace {
// D'(d0,k) from the defining Gamma quotient in long double, element data rebuilt from turn fractions
long double disk_oracle(const OrbifoldInput& in, long long d0, int k) {
  long double w1 = 1.0L / in.r, w2 = (long double)(in.s + in.r * in.f) / (in.r * in.m), w3 = -w1 - w2;
  auto fr = [](long double x) {
    long double f = x - std::floor(x);
    return std::abs(f - 1) < 1e-12L || std::abs(f) < 1e-12L ? 0.0L : f;
  };
  long double c1 = fr(d0 * w1), c2 = fr(d0 * w2 - (long double)k / in.m), c3 = fr(d0 * w3 + (long double)k / in.m);
  long double age = std::round(c1 + c2 + c3);
  long double fl = std::floor(d0 * w3 + (long double)k / in.m + 1e-12L);
  long double sign = std::fmod(std::abs(fl), 2.0L) == 0 ? 1 : -1;
  auto rg = [](long double x) {
    if (x <= 0 && std::abs(x - std::round(x)) < 1e-12L) return 0.0L;
    return 1.0L / std::tgamma(x);
  };
  long double g = std::tgamma(d0 * (w1 + w2) + c3) * rg(d0 * w1 - c1 + 1) * rg(d0 * w2 - c2 + 1);
  return -sign * std::pow((long double)d0, 1 - age) * g / in.m;
}
}  // namespace

TEST_CASE("R matrix") {
  OrbifoldData d({1, 1, 0, 1});
  auto R = r_matrix(d, 1);
  // exp of B_2(0)/(2 w_i) z summed: (1/12)(1 + 1 - 1/2)
  CHECK(std::abs(R(0, 0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(std::abs(R(0, 0, 1)) - 1.0 / 8) < 1e-15);
  for (const auto& in : catalog()) {
    OrbifoldData e(in);
    auto S = r_matrix(e, 6);
    for (int a = 0; a < e.order(); ++a)
      for (int b = 0; b < e.order(); ++b) CHECK(std::abs(S(a, b, 0) - (a == b ? 1.0 : 0.0)) < 1e-15);
    CHECK(symplectic_defect(S) < 1e-12);
  }
}

TEST_CASE("disk function") {
  CHECK(std::abs(disk_function(OrbifoldData({1, 1, 0, 1}), 1, 0) - (-1.0)) < 1e-15);
  CHECK(std::abs(disk_function(OrbifoldData({1, 1, 0, 2}), 1, 0) - 1.0) < 1e-15);
  int zeros = 0;
  for (const auto& in : catalog()) {
    OrbifoldData d(in);
    for (long long d0 = 1; d0 <= 9; ++d0)
      for (int k = 0; k < in.m; ++k) {
        long double o = disk_oracle(in, d0, k);
        cplx v = disk_function(d, d0, k);
        if (o == 0) ++zeros;
        CHECK(std::abs(v.imag()) == 0.0);
        CHECK(std::abs(v.real() - (double)o) <= 1e-12 * std::max(1.0, std::abs((double)o)));
      }
  }
  // d0 w_i - c_i is a non-negative integer for the whole catalog, so no zero ever fires
  CHECK(zeros == 0);
  CHECK_THROWS_AS(disk_function(OrbifoldData({1, 1, 0, 1}), 0, 0), ValidationError);
}

TEST_CASE("xi-tilde") {
  OrbifoldData d({1, 1, 0, 1});
  auto x = xi_tilde(d, 0, 0, 4);
  CHECK(std::abs(x[0] - (-2.0)) < 1e-14);
  for (const auto& in : catalog()) {
    OrbifoldData e(in);
    const int D = 6;
    for (int g = 0; g < e.order(); ++g)
      for (int a = -2; a < 2; ++a) {
        auto lo = xi_tilde(e, g, a, D), hi = xi_tilde(e, g, a + 1, D);
        REQUIRE(lo.size() == static_cast<std::size_t>(in.m * D));
        for (int k = 0; k < in.m; ++k)
          for (int dd = 1; dd <= D; ++dd)
            CHECK(std::abs(hi[k * D + dd - 1] - double(dd) * lo[k * D + dd - 1]) < 1e-12 * (1 + std::abs(hi[k * D + dd - 1])));
      }
  }
  CHECK_THROWS(xi_tilde(d, 0, -3, 4));
}

TEST_CASE("edge weights") {
  for (const auto& in : catalog()) {
    OrbifoldData d(in);
    const int K = 3, N = d.order();
    double rem = 1;
    auto E = edge_weights_A(d, K, &rem);
    CHECK(rem < 1e-11);
    auto at = [&](int a, int b, int k, int l) { return E[((a * N + b) * (K + 1) + k) * (K + 1) + l]; };
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        for (int k = 0; k <= K; ++k)
          for (int l = 0; l <= K; ++l) CHECK(std::abs(at(a, b, k, l) - at(b, a, l, k)) < 1e-13);
  }
}

TEST_CASE("disk potential and leg symmetry") {
  OrbifoldData d({1, 1, 0, 1});
  auto F = f_gn_A(d, 0, 1, 0, 4);
  CHECK(std::abs(F.coeff({}, {{1, 0}}) - 1.0) < 1e-14);
  auto direct = disk_direct_A(d, 0, 4);
  CHECK(std::abs(direct.coeff({}, {{1, 0}}) - 1.0) < 1e-14);

  // class support follows the winding element
  OrbifoldData t({1, 3, 0, 1});
  auto G = f_gn_A(t, 0, 1, 0, 6);
  for (int k = 0; k < 3; ++k)
    for (int dd = 1; dd <= 6; ++dd)
      if (std::abs(disk_function(t, dd, k)) == 0) CHECK(std::abs(G.coeff({0, 0}, {{dd, k}})) == 0.0);

  for (const auto& in : {OrbifoldInput{1, 1, 0, 1}, OrbifoldInput{1, 2, 0, 1}}) {
    OrbifoldData e(in);
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 2}}) {
      auto P = f_gn_A(e, g, n, 1, 3);
      double worst = 0;
      for (int mon = 0; mon < static_cast<int>(P.monomials.size()); ++mon)
        for (int i = 0; i < P.leg_size(); ++i)
          for (int j = 0; j < P.leg_size(); ++j) {
            std::vector<int> a(n, 0), b(n, 0);
            a[0] = i;
            a[1] = j;
            b[0] = j;
            b[1] = i;
            worst = std::max(worst, std::abs(P.at(mon, a) - P.at(mon, b)));
          }
      CHECK(worst < 1e-12 * (1 + P.max_abs()));
    }
  }
}
