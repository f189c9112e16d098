#include "doctest.h"

#include <cmath>

#include "ocgw/amodel.hpp"
#include "ocgw/bmodel.hpp"
#include "ocgw/eo.hpp"

using namespace ocgw;

namespace {
const std::vector<OrbifoldInput> curves{{1, 1, 0, 1}, {1, 1, 0, 2}, {1, 2, 0, 1}, {1, 3, 0, 1}};
}

TEST_CASE("(1,1,0,1) branch point") {
  SpectralCurve c(OrbifoldData({1, 1, 0, 1}));
  CHECK(c.order() == 1);
  CHECK(std::abs(c.branch_t(0) - (-0.5)) < 1e-15);
  CHECK(std::abs(c.branch_X(0) - 0.25) < 1e-15);
  CHECK(std::abs(std::abs(critical_X(c.data(), 0)) - 0.25) < 1e-14);
}

TEST_CASE("curve geometry") {
  for (const auto& in : curves) {
    OrbifoldData d(in);
    SpectralCurve c(d);
    INFO("m=" << in.m << " f=" << in.f);
    auto num = branch_points_numeric(d);
    REQUIRE(static_cast<int>(num.size()) == d.order());
    for (int a = 0; a < c.order(); ++a) {
      double best = 1e9;
      for (auto z : num) best = std::min(best, std::abs(z - c.branch_t(a)));
      CHECK(best < 1e-10);
      CHECK(std::abs(std::abs(c.branch_X(a)) - std::abs(c.branch_X(0))) < 1e-12);
      CHECK(std::abs(c.h1_local(a) - h1_zero(d)) < 1e-10);
      // x = -log X is a_a + zeta^2 on both sheets
      for (double z : {0.01, -0.01}) {
        cplx t = c.branch_t(a) + c.s(a).eval(z);
        CHECK(std::abs(-std::log(c.X(t) / c.branch_X(a)) - z * z) < 1e-12);
      }
      // a distinct branch value per character
      for (int b = 0; b < a; ++b) CHECK(std::abs(c.branch_X(a) - c.branch_X(b)) > 1e-6);
    }
    for (int l = 0; l < in.m; ++l) {
      cplx p = c.puncture(l);
      CHECK(std::abs(std::pow(p, in.m) + 1.0) < 1e-13);
      CHECK(std::abs(c.X(p)) < 1e-13);
      // sigma inverts X near the puncture
      cplx X = 1e-3;
      CHECK(std::abs(c.X(p + c.sigma(l).eval(X)) - X) < 1e-13);
    }
  }
  CHECK_THROWS_AS(SpectralCurve(OrbifoldData({3, 1, 1, 1})), ValidationError);
}

TEST_CASE("theta forms") {
  for (const auto& in : curves) {
    SpectralCurve c{OrbifoldData(in)};
    for (int a = 0; a < c.order(); ++a) {
      double df = 1;
      for (int d = 0; d <= 3; ++d) {
        if (d > 0) df *= 2 * d + 1;
        auto th = c.at_branch(theta_form(c, a, d), a);
        CHECK(std::abs(th[-2 * d - 2] - (-df / std::pow(2.0, d))) < 1e-11 * df);
        CHECK(std::abs(th.residue()) < 1e-11);
        CHECK(th.lo() >= -2 * d - 2);
      }
    }
    CHECK(theta_check(c).ok);
    CHECK(c_kernel_check(c).ok);
    CHECK(xi_recursion_check(c, 1).ok);
    CHECK(xihxi_check(c, 2).ok);
    CHECK(b_check_consistency(c).ok);
  }
}

TEST_CASE("recursion against pants and the DOSS sum") {
  for (const auto& in : curves) {
    OrbifoldData d(in);
    CHECK(pants_check(d).deviation < 1e-10);
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {1, 1}, {1, 2}, {2, 1}}) {
      auto r = doss_check(d, g, n);
      INFO(r.name);
      CHECK(r.deviation < 1e-9);
    }
    RecursionInfo info;
    auto w = omega_gn(d, 0, 4, &info);
    CHECK(omega_symmetry_defect(w, 4) < 1e-10);
    CHECK(info.kernel_sign == 1.0);
  }
  CHECK_THROWS_AS(omega_gn(OrbifoldData({1, 1, 0, 1}), 0, 2), ValidationError);
}

TEST_CASE("unstable potentials from the curve") {
  for (const auto& in : curves) {
    OrbifoldData d(in);
    const double G = d.order();
    auto ann = eo_potential(d, 0, 2, 4);
    auto annA = unstable_A(d, 2, 0, 4).to_psi();
    CHECK(relative_deviation(ann, annA, -G * G) < 1e-9);
    // the curve disk is -|G| times the A disk: the opposite sign to the stated identity
    auto disk = eo_potential(d, 0, 1, 6);
    auto diskA = unstable_A(d, 1, 0, 6).to_psi();
    CHECK(relative_deviation(disk, diskA, -G) < 1e-9);
    CHECK(relative_deviation(disk, diskA, G) > 1.0);
  }
  auto F = eo_potential(OrbifoldData({1, 1, 0, 1}), 0, 3, 3);
  CHECK(F.max_abs() > 0.0);
  CHECK(F.meta.contains("window"));
}
