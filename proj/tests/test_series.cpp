#include "doctest.h"

#include <random>

#include "ocgw/series.hpp"

using namespace ocgw;

namespace {
Laurent rand_series(std::mt19937& rng, int lo, int hi) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Laurent s(lo, hi);
  for (int e = lo; e <= hi; ++e) s.ref(e) = cplx(u(rng), u(rng));
  return s;
}

double diff(const Laurent& a, const Laurent& b) {
  double d = 0;
  int hi = std::min(a.hi(), b.hi());
  for (int e = std::min(a.lo(), b.lo()); e <= hi; ++e) d = std::max(d, std::abs(a[e] - b[e]));
  return d;
}

// plain O(N^2) power series product, the composition oracle is repeated products of this
std::vector<cplx> conv(const std::vector<cplx>& a, const std::vector<cplx>& b, int N) {
  std::vector<cplx> c(N + 1);
  for (int i = 0; i <= N; ++i)
    for (int j = 0; i + j <= N; ++j) c[i + j] += a[i] * b[j];
  return c;
}
}  // namespace

TEST_CASE("exp and inverse") {
  Laurent z = Laurent::monomial(1.0, 1, 3);
  Laurent e = z.exp();
  CHECK(std::abs(e[0] - 1.0) < 1e-15);
  CHECK(std::abs(e[1] - 1.0) < 1e-15);
  CHECK(std::abs(e[2] - 0.5) < 1e-15);
  CHECK(std::abs(e[3] - 1.0 / 6) < 1e-15);
  Laurent one_minus = Laurent(0, 6, {1.0, -1.0, 0, 0, 0, 0, 0});
  Laurent prod = one_minus.inverse() * one_minus;
  CHECK(diff(prod, Laurent::constant(1.0, 6)) < 1e-15);
}

TEST_CASE("compose log(1+w) with w = z + z^2 against convolution") {
  const int N = 8;
  Laurent log1p(0, N);
  for (int k = 1; k <= N; ++k) log1p.ref(k) = (k % 2 ? 1.0 : -1.0) / k;
  Laurent inner(0, N);
  inner.ref(1) = 1.0;
  inner.ref(2) = 1.0;
  Laurent got = log1p.compose(inner);
  std::vector<cplx> w(N + 1), pw(N + 1), oracle(N + 1);
  w[1] = w[2] = 1.0;
  pw[0] = 1.0;
  for (int k = 1; k <= N; ++k) {
    pw = conv(pw, w, N);
    for (int i = 0; i <= N; ++i) oracle[i] += log1p[k] * pw[i];
  }
  for (int i = 0; i <= N; ++i) CHECK(std::abs(got[i] - oracle[i]) < 1e-14);
  CHECK(std::abs(got[1] - 1.0) < 1e-15);
  CHECK(std::abs(got[2] - 0.5) < 1e-15);
  CHECK(std::abs(got[3] + 2.0 / 3) < 1e-15);
  // log(1+z+z^2) equals it too
  CHECK(diff(got, (inner + Laurent::constant(1.0, N)).log()) < 1e-14);
}

TEST_CASE("residue") {
  Laurent a(-1, 1, {1.0, 3.0, 1.0});
  CHECK(a.residue() == cplx(1.0));
  Laurent b = Laurent::monomial(5.0, -2, 2);
  CHECK(b.residue() == cplx(0.0));
  Laurent c = Laurent::monomial(1.0, 1, 6).exp().shifted(-1);
  CHECK(std::abs(c.residue() - 1.0) < 1e-15);
}

TEST_CASE("reversion") {
  const int N = 10;
  Laurent id = Laurent::monomial(1.0, 1, N);
  CHECK(diff(id.reversion(), id) < 1e-15);
  Laurent two = Laurent::monomial(2.0, 1, N);
  CHECK(diff(two.reversion(), Laurent::monomial(0.5, 1, N)) < 1e-15);
  Laurent s(0, N);
  s.ref(1) = 1.0;
  s.ref(2) = 1.0;
  Laurent t = s.reversion();
  // t(X) = sum (-1)^{n-1} C_{n-1} X^n with Catalan numbers
  double cat = 1;
  for (int n = 1; n <= N; ++n) {
    CHECK(std::abs(t[n] - (n % 2 ? 1.0 : -1.0) * cat) < 1e-9 * cat);
    cat = cat * 2 * (2 * n - 1) / (n + 1);
  }
  CHECK(diff(s.compose(t), id) < 1e-12);
  Laurent bad(0, N);
  bad.ref(2) = 1.0;
  CHECK_THROWS(bad.reversion());
}

TEST_CASE("ring axioms and derivative of exp on random input") {
  std::mt19937 rng(7);
  for (int it = 0; it < 20; ++it) {
    Laurent a = rand_series(rng, -2, 8), b = rand_series(rng, -1, 9), c = rand_series(rng, 0, 7);
    CHECK(diff(a * b, b * a) < 1e-14);
    CHECK(diff((a * b) * c, a * (b * c)) < 1e-13);
    CHECK(diff(a + b, b + a) < 1e-15);
    CHECK(diff(a * (b + c), a * b + a * c) < 1e-13);
    Laurent p = rand_series(rng, 1, 9).with_lo(0);
    p.ref(0) = 0.0;
    CHECK(diff(p.exp().derivative(), p.derivative() * p.exp()) < 1e-13);
    Laurent q = p + Laurent::constant(1.5, 9);
    CHECK(diff(q.log().exp(), q) < 1e-13);
  }
}

TEST_CASE("integrate_log and euler") {
  Laurent x2 = Laurent::monomial(1.0, 2, 4);
  CHECK(std::abs(integrate_log(x2)[2] - 0.5) < 1e-15);
  Laurent x = Laurent::monomial(1.0, 1, 4);
  CHECK(diff(integrate_log(x, 2), x) < 1e-15);
  std::mt19937 rng(3);
  Laurent s = rand_series(rng, 1, 9);
  CHECK(diff(euler(integrate_log(s)), s) < 1e-15);
  CHECK(diff(integrate_log(euler(s, 2), 2), s) < 1e-14);
  CHECK_THROWS(integrate_log(Laurent::constant(1.0, 3)));
}

TEST_CASE("multivariate series") {
  TruncatedSeries shape({"x", "y"}, {0, 0}, {4, 3});
  auto x = TruncatedSeries::variable(shape, 0);
  auto y = TruncatedSeries::variable(shape, 1);
  auto e = (x + y).exp();
  // [x^a y^b] e^{x+y} = 1/(a! b!)
  CHECK(std::abs(e.coeff({2, 1}) - 0.5) < 1e-15);
  CHECK(std::abs(e.coeff({1, 3}) - 1.0 / 6) < 1e-15);
  auto p = x * y + y * x;
  CHECK(std::abs(p.coeff({1, 1}) - 2.0) < 1e-15);
  TruncatedSeries z({"z"}, {-2}, {3});
  TruncatedSeries r = z;
  r.set({-1}, 4.0);
  r.set({2}, 1.0);
  CHECK(r.residue() == cplx(4.0));
  CHECK_FALSE(z.in_window({4}));
  // compose exp(x) with x -> y (shape x only)
  TruncatedSeries one({"t"}, {0}, {5});
  auto t = TruncatedSeries::variable(one, 0);
  auto l = (TruncatedSeries::constant(one, 1.0) + t).log();
  auto back = l.exp();
  CHECK(std::abs(back.coeff({1}) - 1.0) < 1e-14);
  CHECK(std::abs(back.coeff({3})) < 1e-14);
  auto sub = t * 2.0;
  auto c = t.exp().compose({sub});
  CHECK(std::abs(c.coeff({3}) - 8.0 / 6) < 1e-14);
}
