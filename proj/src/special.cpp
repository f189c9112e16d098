#include "ocgw/special.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>

namespace ocgw {

BigQ to_big(const Q& q) { return BigQ(q.numerator()) / BigQ(q.denominator()); }

double big_to_double(const BigQ& q) { return q.convert_to<double>(); }

BigQ bernoulli_number(int n) {
  static std::mutex mu;
  static std::vector<BigQ> table{BigQ(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(table.size()) <= n) {
    int k = static_cast<int>(table.size());
    // sum_{j<k} C(k+1, j) B_j = -(k+1) B_k
    BigQ s(0);
    boost::multiprecision::cpp_int binom = 1;
    for (int j = 0; j < k; ++j) {
      s += BigQ(binom) * table[j];
      binom = binom * (k + 1 - j) / (j + 1);
    }
    table.push_back(-s / BigQ(k + 1));
  }
  return table[n];
}

BigQ bernoulli_poly(int n, const Q& x) {
  BigQ xb = to_big(x);
  BigQ s(0), xp(1);
  boost::multiprecision::cpp_int binom = 1;
  // B_n(x) = sum_k C(n,k) B_{n-k} x^k
  for (int k = 0; k <= n; ++k) {
    s += BigQ(binom) * bernoulli_number(n - k) * xp;
    xp *= xb;
    binom = binom * (n - k) / (k + 1);
  }
  return s;
}

double double_factorial_odd(int k) {
  double v = 1.0;
  for (int i = 2 * k - 1; i > 1; i -= 2) v *= i;
  return v;
}

double factorial(int n) {
  double v = 1.0;
  for (int i = 2; i <= n; ++i) v *= i;
  return v;
}

namespace {
constexpr double kG = 7.0;
constexpr std::array<double, 9> kCoef{0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                      771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_sum(double x) {
  double a = kCoef[0];
  for (int i = 1; i < 9; ++i) a += kCoef[i] / (x + i);
  return a;
}
}  // namespace

double gamma_lanczos(double x) {
  if (x < 0.5) return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_lanczos(1.0 - x));
  x -= 1.0;
  double t = x + kG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x + 0.5) * std::exp(-t) * lanczos_sum(x);
}

double lgamma_lanczos(double x, int* sign) {
  if (x < 0.5) {
    double s = std::sin(std::numbers::pi * x);
    int sg = 1;
    double lr = lgamma_lanczos(1.0 - x, &sg);
    if (sign) *sign = (s < 0 ? -1 : 1) * sg;
    return std::log(std::numbers::pi) - std::log(std::abs(s)) - lr;
  }
  x -= 1.0;
  double t = x + kG + 0.5;
  if (sign) *sign = 1;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (x + 0.5) * std::log(t) - t + std::log(lanczos_sum(x));
}

static bool nonpositive_integer(const Q& x) { return x.denominator() == 1 && x.numerator() <= 0; }

double rgamma(const Q& x) {
  if (nonpositive_integer(x)) return 0.0;
  return 1.0 / gamma_lanczos(to_double(x));
}

double gamma_ratio(const Q& a, const Q& b, const Q& c) {
  if (nonpositive_integer(b) || nonpositive_integer(c)) return 0.0;
  if (nonpositive_integer(a)) throw std::domain_error("Gamma pole in numerator");
  int sa = 1, sb = 1, sc = 1;
  double la = lgamma_lanczos(to_double(a), &sa);
  double lb = lgamma_lanczos(to_double(b), &sb);
  double lc = lgamma_lanczos(to_double(c), &sc);
  double v = std::exp(la - lb - lc);
  // relative condition of exp(la - lb - lc) is ~ |la|+|lb|+|lc|
  if (std::abs(la) + std::abs(lb) + std::abs(lc) > 1e3) {
    auto hq = [](const Q& q) { return HP(q.numerator()) / HP(q.denominator()); };
    HP r = gamma_hp(hq(a)) / (gamma_hp(hq(b)) * gamma_hp(hq(c)));
    return r.convert_to<double>();
  }
  return sa * sb * sc * v;
}

HP gamma_hp(const HP& x) { return boost::math::tgamma(x); }

HP lgamma_hp(const HP& x) { return boost::math::lgamma(x); }

}  // namespace ocgw

namespace ocgw {
std::vector<BigQ> exp_series_q(const std::vector<BigQ>& a) {
  const int N = static_cast<int>(a.size());
  std::vector<BigQ> e(N, BigQ(0));
  if (N == 0) return e;
  e[0] = 1;
  for (int n = 1; n < N; ++n) {
    BigQ s(0);
    for (int k = 1; k <= n; ++k) s += BigQ(k) * a[k] * e[n - k];
    e[n] = s / BigQ(n);
  }
  return e;
}
}  // namespace ocgw
