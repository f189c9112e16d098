#include "doctest.h"

#include <cmath>

#include "ocgw/bmodel.hpp"
#include "ocgw/checks.hpp"

using namespace ocgw;

TEST_CASE("f matrix and the bridge to R") {
  OrbifoldData d({1, 1, 0, 1});
  auto f = f_matrix(d, 2);
  CHECK(std::abs(f(0, 0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(f(0, 0, 1) - 1.0 / 8) < 1e-15);
  for (const auto& in : catalog()) {
    OrbifoldData e(in);
    const int K = 8;
    auto F = f_matrix(e, K);
    auto R = r_matrix(e, K);
    double dev = 0;
    for (int a = 0; a < e.order(); ++a)
      for (int b = 0; b < e.order(); ++b) {
        CHECK(std::abs(F(a, b, 0) - (a == b ? 1.0 : 0.0)) < 1e-15);
        // [z^k] R(-z)^b_a = (-1)^k [z^k] R(z)^b_a
        for (int k = 0; k <= K; ++k) dev = std::max(dev, std::abs(F(a, b, k) - (k % 2 ? -1.0 : 1.0) * R(b, a, k)));
      }
    CHECK(dev < 1e-12);
  }
}

TEST_CASE("h-check series") {
  for (const auto& in : catalog()) {
    OrbifoldData d(in);
    const int K = 6;
    double lead = std::sqrt(2.0 / d.abs_w123()) / d.order();
    CHECK(std::abs(h1_zero(d) - lead) < 1e-15);
    auto h0 = h_check_series(d, 0, K);
    CHECK(std::abs(h0[0] - lead) < 1e-14);
    for (int a = 0; a < d.order(); ++a) {
      auto h = h_check_series(d, a, K), g = h_check_from_f(d, a, K);
      for (int k = 0; k <= K; ++k) {
        CHECK(std::abs(h[k] - h0[k]) < 1e-13);
        CHECK(std::abs(h[k] - g[k]) < 1e-12);
      }
    }
  }
}

TEST_CASE("B-check: symmetry and the A-model edges") {
  for (const auto& in : catalog()) {
    OrbifoldData d(in);
    const int K = 4, N = d.order();
    auto B = b_check_table(d, K);
    auto E = edge_weights_A(d, K);
    auto at = [&](const std::vector<cplx>& v, int a, int b, int k, int l) {
      return v[((a * N + b) * (K + 1) + k) * (K + 1) + l];
    };
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        for (int k = 0; k <= K; ++k)
          for (int l = 0; l <= K; ++l) {
            CHECK(std::abs(at(B, a, b, k, l) - at(B, b, a, l, k)) < 1e-12);
            CHECK(std::abs(at(B, a, b, k, l) - at(E, a, b, k, l)) < 1e-11);
          }
    CHECK(std::abs(b_check(d, 0, 0, 1, 2) - at(B, 0, 0, 1, 2)) < 1e-13);
  }
}

TEST_CASE("xi expansion is proportional to xi-tilde") {
  for (const auto& in : catalog()) {
    OrbifoldData d(in);
    const int D = 6, m = in.m;
    cplx c = std::sqrt(cplx(-2.0) / (d.wd(0) * d.wd(1) * d.wd(2)));
    for (int b = 0; b < d.order(); ++b) {
      auto psi = xi_expansion_psi(d, b, D);
      // the A side is in the prime basis; move each winding slice to psi
      auto t = xi_tilde(d, b, 0, D);
      for (int dd = 1; dd <= D; ++dd) {
        std::vector<cplx> v(m);
        for (int k = 0; k < m; ++k) v[k] = t[k * D + dd - 1];
        auto w = prime_to_psi_coords(v);
        for (int l = 0; l < m; ++l) CHECK(std::abs(psi[l * D + dd - 1] - c * w[l]) < 1e-11 * (1 + std::abs(c * w[l])));
      }
      for (int l = 0; l < m; ++l) CHECK(xi_expansion(d, b, l, D).size() == static_cast<std::size_t>(D));
    }
  }
  OrbifoldData t({1, 3, 0, 1});
  for (int b = 0; b < 3; ++b)
    for (int dd = 1; dd <= 6; ++dd) {
      bool any = false;
      for (int l = 0; l < 3; ++l) any = any || std::abs(xi_expansion(t, b, l, 6)[dd - 1]) > 0;
      bool support = false;
      for (int k = 0; k < 3; ++k) support = support || std::abs(disk_function(t, dd, k)) > 0;
      CHECK(any == support);
    }
}

TEST_CASE("oscillatory integral at u = 10") {
  OrbifoldData d({1, 1, 0, 1});
  double oracle = std::exp(2 * std::lgamma(10.0) - std::lgamma(21.0));
  cplx v = oscillatory_phi(d, 0, 10.0, 0, {});
  CHECK(std::abs(v - oracle) < 1e-12 * oracle);
  for (double u : {20.0, 40.0}) CHECK(std::abs(f_from_oscillatory(d, 0, 0, u) - f_series_value(f_matrix(d, 8), 0, 0, u)) < 1e-8);
}

TEST_CASE("Stirling ladder") {
  for (const auto& in : {OrbifoldInput{1, 1, 0, 1}, OrbifoldInput{1, 3, 0, 1}, OrbifoldInput{3, 1, 1, 1}}) {
    OrbifoldData d(in);
    for (int h = 0; h < d.order(); ++h) {
      auto r = stirling_check(d, h, {20, 40, 80}, 4);
      CHECK(r.ok);
      for (double x : r.ratio) CHECK((x > 32.0 / 3 && x < 96.0));
    }
    auto r0 = stirling_check(d, 0, {20, 40, 80, 160}, 0);
    CHECK(r0.deviation.back() < r0.deviation.front());
  }
}

TEST_CASE("per-graph ratio and the sqrt(-2) canary") {
  OrbifoldData d({1, 2, 0, 1});
  auto r = per_graph_ratio(d, 1, 1, 1, 3);
  CHECK(r.graphs > 0);
  CHECK(r.max_deviation < 1e-9);
  // the opposite root of -2 cancels in the open leaf but not at a trivalent vertex
  OrbifoldData t({1, 1, 0, 1});
  auto gs = enumerate_graphs(0, 3, 0, t.order());
  PotentialSeries good(0, 3, 0, 1, 3, 0, Basis::Psi), bad = good;
  sum_graphs(gs, weight_tables_B(t, 3, 3), -1.0, 0, good);
  sum_graphs(gs, weight_tables_B(t, 3, 3, -sqrt_m2()), -1.0, 0, bad);
  CHECK(good.max_abs() > 0.1);
  CHECK(relative_deviation(bad, good, -1.0) < 1e-13);
  CHECK(relative_deviation(bad, good, 1.0) > 1.0);
}

TEST_CASE("B potential") {
  OrbifoldData d({1, 1, 0, 1});
  auto Fb = f_gn_B(d, 0, 3, 0, 3);
  auto Fa = f_gn_A(d, 0, 3, 0, 3);
  // (-1)^{g-1+n} |G|^n = +1 here
  CHECK(relative_deviation(Fb, Fa, 1.0) < 1e-11);
  auto Db = f_gn_B(d, 0, 1, 0, 3);
  CHECK(std::abs(Db.coeff({}, {{1, 0}}) - (-1.0)) < 1e-13);
}
