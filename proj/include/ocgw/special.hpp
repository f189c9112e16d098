#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "ocgw/orbifold.hpp"

namespace ocgw {

using BigQ = boost::multiprecision::cpp_rational;
using HP = boost::multiprecision::cpp_bin_float_50;

BigQ to_big(const Q& q);
double big_to_double(const BigQ& q);

BigQ bernoulli_number(int n);  // B_1 = -1/2
BigQ bernoulli_poly(int n, const Q& x);

// (2k-1)!! with (-1)!! = 1
double double_factorial_odd(int k);
double factorial(int n);

// Lanczos approximation, double precision
double gamma_lanczos(double x);
// log|Gamma(x)| and sign, Lanczos based
double lgamma_lanczos(double x, int* sign = nullptr);

// 1/Gamma(x) for exact rational x: exactly 0 at non-positive integers
double rgamma(const Q& x);
// Gamma(a) / (Gamma(b) Gamma(c)) with reciprocal-Gamma semantics on b, c
double gamma_ratio(const Q& a, const Q& b, const Q& c);

// high precision fallback
HP gamma_hp(const HP& x);
HP lgamma_hp(const HP& x);

}  // namespace ocgw

namespace ocgw {
// exp of a power series with zero constant term, exact: e_n = (1/n) sum_k k a_k e_{n-k}
std::vector<BigQ> exp_series_q(const std::vector<BigQ>& a);
}  // namespace ocgw
