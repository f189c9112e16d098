#include "doctest.h"

#include <cmath>

#include "ocgw/checks.hpp"
#include "ocgw/mirrormap.hpp"

using namespace ocgw;

TEST_CASE("trivial group has no map") {
  auto s = mirror_map_series(OrbifoldData({1, 1, 0, 1}), 4);
  CHECK(s.p == 0);
  CHECK(s.tau.empty());
  CHECK(s.inverse.empty());
}

TEST_CASE("(3,1,1,1): first correction at q^4") {
  OrbifoldData d({3, 1, 1, 1});
  auto s = mirror_map_series(d, 6);
  REQUIRE(s.p == 1);
  const auto& t = s.tau[0];
  CHECK(std::abs(t.coeff({1}) - 1.0) == 0.0);
  CHECK(std::abs(t.coeff({2})) == 0.0);
  CHECK(std::abs(t.coeff({3})) == 0.0);
  // (1/3!) prod_i Gamma(2/3)/Gamma(-1/3)
  long double r = std::tgamma(2.0L / 3) / std::tgamma(-1.0L / 3);
  double oracle = double(r * r * r / 6);
  CHECK(std::abs(oracle + 1.0 / 162) < 1e-15);
  CHECK(std::abs(t.coeff({4}) - oracle) < 1e-15);
  CHECK(std::abs(mirror_coefficient(d, 0, {3}) - oracle) < 1e-15);
}

TEST_CASE("degree filter, leading term and round trip over the catalog") {
  for (const auto& in : catalog()) {
    OrbifoldData d(in);
    INFO(input_name(in));
    CHECK(mirror_degrees(d, 6) == mirror_degrees_brute(d, 6));
    auto s = mirror_map_series(d, 6);
    CHECK(s.p == d.p());
    for (int a = 0; a < s.p; ++a) {
      std::vector<int> e(s.p, 0);
      e[a] = 1;
      CHECK(s.tau[a].coeff(e) == cplx(1.0));
      CHECK(s.inverse[a].coeff(e) == cplx(1.0));
      CHECK(mirror_coefficient(d, a, std::vector<int>(s.p, 0)) == 1.0);
    }
    if (s.p) CHECK(mirror_round_trip(s) <= 1e-12);
  }
}
