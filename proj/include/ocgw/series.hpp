#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ocgw {

using cplx = std::complex<double>;

struct WindowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense univariate truncated Laurent series: coefficients for exponents lo..hi,
// everything above hi is unknown (O(z^{hi+1})).
class Laurent {
 public:
  Laurent() = default;
  Laurent(int lo, int hi);
  Laurent(int lo, int hi, std::vector<cplx> coefs);
  static Laurent constant(cplx c, int hi);
  static Laurent monomial(cplx c, int e, int hi);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool empty() const { return hi_ < lo_; }
  // coefficient of z^e; zero below lo, error above hi
  cplx operator[](int e) const;
  cplx& ref(int e);
  const std::vector<cplx>& coefs() const { return c_; }

  int valuation(double tol = 0.0) const;
  Laurent truncated(int hi) const;
  Laurent with_lo(int lo) const;  // widens or drops low exponents
  Laurent shifted(int k) const;   // z^k * this
  Laurent negated_var() const;    // f(-z)

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent operator*(cplx s) const;
  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& axpy(cplx s, const Laurent& o);  // this += s*o on the common window

  Laurent inverse() const;
  Laurent derivative() const;
  Laurent exp() const;  // power series
  Laurent log() const;  // power series with nonzero constant
  Laurent pow(int k) const;
  Laurent sqrt() const;                   // nonzero constant; principal branch of the constant
  Laurent compose(const Laurent& inner) const;  // this(inner(z)), inner valuation >= 1
  Laurent reversion() const;              // t(X) with this(t(X)) = X, simple zero
  cplx residue() const { return (*this)[-1]; }
  cplx eval(cplx z) const;

 private:
  int lo_ = 0;
  int hi_ = -1;
  std::vector<cplx> c_;
};

// (X d/dX)^{-times}: divides the X^d coefficient by d^times
Laurent integrate_log(const Laurent& s, int times = 1);
Laurent euler(const Laurent& s, int times = 1);  // (X d/dX)^times

// Multivariate truncated series with a sparse exponent map and per-variable windows.
class TruncatedSeries {
 public:
  using Exps = std::vector<int>;

  TruncatedSeries() = default;
  TruncatedSeries(std::vector<std::string> vars, std::vector<int> min_deg, std::vector<int> max_deg,
                  int max_total = -1);

  static TruncatedSeries constant(const TruncatedSeries& shape, cplx c);
  static TruncatedSeries variable(const TruncatedSeries& shape, int var);

  const std::vector<std::string>& vars() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<int>& min_deg() const { return min_; }
  const std::vector<int>& max_deg() const { return max_; }
  int max_total() const { return max_total_; }
  const std::map<Exps, cplx>& terms() const { return c_; }

  bool in_window(const Exps& e) const;
  cplx coeff(const Exps& e) const;
  void set(const Exps& e, cplx v);
  void add_to(const Exps& e, cplx v);
  void prune(double tol = 0.0);

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries operator*(cplx s) const;

  TruncatedSeries exp() const;
  TruncatedSeries log() const;
  // substitutes subs[i] for variable i; all subs share one variable set and have zero constant term
  TruncatedSeries compose(const std::vector<TruncatedSeries>& subs) const;
  // coefficient of var^-1 as a series in the remaining variables (univariate: a constant)
  cplx residue(int var = 0) const;

  std::string dump() const;
  double max_abs_diff(const TruncatedSeries& o) const;

 private:
  TruncatedSeries common_window(const TruncatedSeries& o) const;

  std::vector<std::string> vars_;
  std::vector<int> min_, max_;
  int max_total_ = -1;
  std::map<Exps, cplx> c_;
};

}  // namespace ocgw
