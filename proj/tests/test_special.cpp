#include "doctest.h"

#include <cmath>

#include "ocgw/special.hpp"

using namespace ocgw;

TEST_CASE("Bernoulli numbers and polynomials") {
  CHECK(bernoulli_number(0) == BigQ(1));
  CHECK(bernoulli_number(1) == BigQ(-1, 2));
  CHECK(bernoulli_number(2) == BigQ(1, 6));
  CHECK(bernoulli_number(3) == BigQ(0));
  CHECK(bernoulli_number(12) == BigQ(-691, 2730));
  // B_n(x+1) - B_n(x) = n x^{n-1}
  for (int n = 1; n <= 8; ++n) {
    Q x(2, 7);
    BigQ lhs = bernoulli_poly(n, x + Q(1)) - bernoulli_poly(n, x);
    BigQ rhs = BigQ(n);
    for (int i = 0; i < n - 1; ++i) rhs *= to_big(x);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Gamma") {
  CHECK(std::abs(gamma_lanczos(5.0) - 24.0) < 1e-12);
  CHECK(std::abs(gamma_lanczos(0.5) - std::sqrt(M_PI)) < 1e-14);
  for (double x : {-2.5, -0.3, 0.7, 3.3, 11.1}) {
    CHECK(std::abs(gamma_lanczos(x) / std::tgamma(x) - 1.0) < 1e-13);
    int sg = 0;
    double l = lgamma_lanczos(x, &sg);
    CHECK(std::abs(l - std::lgamma(x)) < 1e-12);
    CHECK(sg == (std::tgamma(x) > 0 ? 1 : -1));
  }
  CHECK(rgamma(Q(0)) == 0.0);
  CHECK(rgamma(Q(-3)) == 0.0);
  CHECK(std::abs(rgamma(Q(1, 2)) - 1 / std::sqrt(M_PI)) < 1e-15);
  CHECK(gamma_ratio(Q(3), Q(-1), Q(1)) == 0.0);
  CHECK(std::abs(double(gamma_hp(HP(5))) - 24.0) < 1e-30);
  CHECK(double_factorial_odd(0) == 1.0);
  CHECK(double_factorial_odd(3) == 15.0);
  CHECK(factorial(6) == 720.0);
}

TEST_CASE("exact exp series") {
  std::vector<BigQ> a{0, 1};
  auto e = exp_series_q(std::vector<BigQ>{0, 1, 0, 0, 0});
  CHECK(e[4] == BigQ(1, 24));
  CHECK(e[0] == BigQ(1));
}
