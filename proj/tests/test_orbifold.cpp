#include "doctest.h"

#include <set>

#include "ocgw/checks.hpp"
#include "ocgw/orbifold.hpp"

using namespace ocgw;

namespace {
// Box points c1 b1 + c2 b2 + c3 b3 straight from the turn fractions of eta1^j eta2^l
std::set<std::array<Q, 3>> box_oracle(const OrbifoldInput& in) {
  Q w1(1, in.r), w2(in.s + in.r * in.f, in.r * in.m), w3 = -w1 - w2;
  std::set<std::array<Q, 3>> out;
  for (int j = 0; j < in.r; ++j)
    for (int l = 0; l < in.m; ++l) {
      // eta2 acts by (1, e^{2 pi i/m}, e^{-2 pi i/m})
      std::array<Q, 3> c{frac(w1 * j), frac(w2 * j + Q(l, in.m)), frac(w3 * j - Q(l, in.m))};
      out.insert(c);
    }
  return out;
}
}  // namespace

TEST_CASE("trivial group") {
  OrbifoldData d({1, 1, 0, 1});
  CHECK(d.order() == 1);
  CHECK(d.w()[0] == Q(1));
  CHECK(d.w()[1] == Q(1));
  CHECK(d.w()[2] == Q(-2));
  CHECK(d.p() == 0);
  CHECK(d.genus() == 0);
  CHECK(d.punctures() == 3);
  CHECK(d.winding_element(5, 0) == d.identity());
}

TEST_CASE("(3,1,1,1): weights, ages, p and genus") {
  OrbifoldData d({3, 1, 1, 1});
  CHECK(d.order() == 3);
  CHECK(d.w()[0] == Q(1, 3));
  CHECK(d.w()[1] == Q(4, 3));
  CHECK(d.w()[2] == Q(-5, 3));
  std::multiset<int> ages;
  for (const auto& e : d.elements()) ages.insert(e.age);
  CHECK(ages == std::multiset<int>{0, 1, 2});
  CHECK(d.p() == 1);
  CHECK(d.genus() == 1);
  CHECK(d.element(d.winding_element(2, 0)).age == 2);
  CHECK(d.winding_element(2, 0) == d.pow(d.eta1(), 2));
}

TEST_CASE("(1,3,0,1): c values and punctures") {
  OrbifoldData d({1, 3, 0, 1});
  CHECK(d.p() == 2);
  CHECK(d.genus() == 0);
  CHECK(d.punctures() == 5);
  for (int k = 1; k < 3; ++k) {
    const auto& e = d.element(d.index_of(0, k));
    CHECK(e.c[0] == Q(0));
    CHECK(e.c[1] == Q(k, 3));
    CHECK(e.c[2] == Q(1) - Q(k, 3));
    CHECK(e.age == 1);
  }
  const auto& h = d.element(d.winding_element(1, 0));
  CHECK(h.c[0] == Q(0));
  CHECK(h.c[1] == Q(1, 3));
  CHECK(h.c[2] == Q(2, 3));
}

TEST_CASE("Box bijection and group invariants over the catalog") {
  for (const auto& in : catalog()) {
    OrbifoldData d(in);
    INFO(input_name(in));
    CHECK(d.w()[0] + d.w()[1] + d.w()[2] == Q(0));
    CHECK(1 + d.p() + d.genus() == d.order());
    std::set<std::array<Q, 3>> box;
    for (const auto& e : d.elements()) {
      Q sum = e.c[0] + e.c[1] + e.c[2];
      CHECK(sum == Q(e.age));
      CHECK((e.age >= 0 && e.age <= 2));
      box.insert(e.c);
    }
    CHECK(box.size() == static_cast<std::size_t>(d.order()));
    CHECK(box == box_oracle(in));
    for (const auto& a : d.age1()) {
      const auto& e = d.element(a.index);
      Q ma = Q(in.r) * e.c[0], na = Q(-in.s) * e.c[0] + Q(in.m) * e.c[1];
      CHECK(ma.denominator() == 1);
      CHECK(na.denominator() == 1);
      CHECK(ma.numerator() == a.m_a);
      CHECK(na.numerator() == a.n_a);
    }
    // winding element integrality
    for (long long d0 = 1; d0 <= 7; ++d0)
      for (int k = 0; k < in.m; ++k) {
        const auto& e = d.element(d.winding_element(d0, k));
        CHECK((d.w()[0] * d0 - e.c[0]).denominator() == 1);
        CHECK((d.w()[1] * d0 - Q(k, in.m) - e.c[1]).denominator() == 1);
      }
  }
}

TEST_CASE("characters") {
  OrbifoldData d({3, 1, 1, 1});
  int n = d.order();
  CHECK(std::abs(d.character(d.index_of(1, 0), d.eta1()) - turn(Q(1, 3))) < 1e-15);
  for (int h = 0; h < n; ++h) CHECK(d.char_turn(0, h) == Q(0));
  for (const auto& in : catalog()) {
    OrbifoldData e(in);
    int N = e.order();
    for (int a = 0; a < N; ++a) {
      for (int b = 0; b < N; ++b) {
        cplx s = 0;
        for (int h = 0; h < N; ++h) s += e.character(a, e.inv(h)) * e.character(b, h);
        CHECK(std::abs(s - cplx(a == b ? N : 0)) < 1e-12);
      }
      for (int h1 = 0; h1 < N; ++h1)
        for (int h2 = 0; h2 < N; ++h2)
          CHECK(frac(e.char_turn(a, e.mul(h1, h2)) - e.char_turn(a, h1) - e.char_turn(a, h2)) == Q(0));
    }
  }
}

TEST_CASE("validation names the field") {
  auto msg = [](OrbifoldInput in) {
    try {
      validate(in);
    } catch (const ValidationError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(msg({0, 1, 0, 1}).rfind("r ", 0) == 0);
  CHECK(msg({1, 0, 0, 1}).rfind("m ", 0) == 0);
  CHECK(msg({2, 1, 2, 1}).rfind("s ", 0) == 0);
  CHECK(msg({1, 1, 0, 0}).rfind("f ", 0) == 0);
  CHECK(msg({1, 1, 0, 1}).empty());
  CHECK_THROWS_AS(OrbifoldData({1, 1, 0, 1}).winding_element(0, 0), ValidationError);
}

TEST_CASE("basis change") {
  auto v = basis_change({1.0, 0.0});
  REQUIRE(v.size() == 2);
  CHECK(std::abs(v[0] - 0.5) < 1e-15);
  CHECK(std::abs(v[1] - 0.5) < 1e-15);
  for (int m = 1; m <= 5; ++m) {
    std::vector<cplx> a;
    for (int k = 0; k < m; ++k) a.emplace_back(0.3 * k - 1.0, 0.7 / (k + 1));
    auto b = basis_change_inverse(basis_change(a));
    auto c = psi_to_prime_coords(prime_to_psi_coords(a));
    for (int k = 0; k < m; ++k) {
      CHECK(std::abs(b[k] - a[k]) < 1e-14);
      CHECK(std::abs(c[k] - a[k]) < 1e-14);
    }
  }
}
