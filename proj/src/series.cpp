#include "ocgw/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "ocgw/kernels.hpp"

namespace ocgw {

// ---------------------------------------------------------------- Laurent

Laurent::Laurent(int lo, int hi) : lo_(lo), hi_(hi), c_(hi >= lo ? hi - lo + 1 : 0) {}

Laurent::Laurent(int lo, int hi, std::vector<cplx> coefs) : lo_(lo), hi_(hi), c_(std::move(coefs)) {
  c_.resize(hi >= lo ? hi - lo + 1 : 0);
}

Laurent Laurent::constant(cplx c, int hi) { return monomial(c, 0, hi); }

Laurent Laurent::monomial(cplx c, int e, int hi) {
  if (hi < e) return Laurent(e, hi);
  Laurent r(e, hi);
  r.c_[0] = c;
  return r;
}

cplx Laurent::operator[](int e) const {
  if (e > hi_) throw WindowError("coefficient z^" + std::to_string(e) + " beyond window " + std::to_string(hi_));
  if (e < lo_) return {};
  return c_[e - lo_];
}

cplx& Laurent::ref(int e) {
  if (e < lo_ || e > hi_) throw WindowError("exponent outside window");
  return c_[e - lo_];
}

int Laurent::valuation(double tol) const {
  for (int e = lo_; e <= hi_; ++e)
    if (std::abs(c_[e - lo_]) > tol) return e;
  return hi_ + 1;
}

Laurent Laurent::truncated(int hi) const {
  Laurent r(lo_, std::min(hi, hi_));
  for (int e = lo_; e <= r.hi_; ++e) r.c_[e - lo_] = c_[e - lo_];
  return r;
}

Laurent Laurent::with_lo(int lo) const {
  Laurent r(lo, hi_);
  for (int e = std::max(lo, lo_); e <= hi_; ++e) r.c_[e - lo] = c_[e - lo_];
  return r;
}

Laurent Laurent::shifted(int k) const { return Laurent(lo_ + k, hi_ + k, c_); }

Laurent Laurent::negated_var() const {
  Laurent r = *this;
  for (int e = lo_; e <= hi_; ++e)
    if (e % 2 != 0) r.c_[e - lo_] = -r.c_[e - lo_];
  return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r(std::min(lo_, o.lo_), std::min(hi_, o.hi_));
  for (int e = lo_; e <= r.hi_; ++e) r.c_[e - r.lo_] += c_[e - lo_];
  for (int e = o.lo_; e <= r.hi_; ++e) r.c_[e - r.lo_] += o.c_[e - o.lo_];
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) { return axpy(1.0, o); }

Laurent& Laurent::axpy(cplx s, const Laurent& o) {
  int nlo = std::min(lo_, o.lo_);
  int nhi = std::min(hi_, o.hi_);
  if (nlo != lo_ || nhi != hi_) *this = with_lo(nlo).truncated(nhi);
  int a = std::max(o.lo_, lo_);
  if (a <= hi_) kernels::caxpy(static_cast<std::size_t>(hi_ - a + 1), s, o.c_.data() + (a - o.lo_), c_.data() + (a - lo_));
  return *this;
}

Laurent Laurent::operator*(const Laurent& o) const {
  int lo = lo_ + o.lo_;
  int hi = std::min(hi_ + o.lo_, o.hi_ + lo_);
  Laurent r(lo, hi);
  if (hi < lo) return r;
  kernels::cconv(c_.data(), c_.size(), o.c_.data(), o.c_.size(), r.c_.data(), r.c_.size());
  return r;
}

Laurent Laurent::operator*(cplx s) const {
  Laurent r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

Laurent Laurent::inverse() const {
  int v = valuation();
  if (v > hi_) throw WindowError("inverse of a series with no nonzero coefficient in window");
  int n = hi_ - v;
  std::vector<cplx> g(c_.begin() + (v - lo_), c_.end());
  std::vector<cplx> b(n + 1);
  b[0] = 1.0 / g[0];
  for (int k = 1; k <= n; ++k) {
    cplx s = 0;
    for (int j = 1; j <= k; ++j) s += g[j] * b[k - j];
    b[k] = -s * b[0];
  }
  return Laurent(-v, hi_ - 2 * v, b);
}

Laurent Laurent::derivative() const {
  Laurent r(lo_ - 1, hi_ - 1);
  for (int e = lo_; e <= hi_; ++e) r.c_[e - lo_] = c_[e - lo_] * double(e);
  if (lo_ == 0 && r.lo_ == -1) return r.with_lo(0);
  return r;
}

Laurent Laurent::exp() const {
  if (valuation() < 0) throw WindowError("exp of a series with a pole");
  Laurent f = with_lo(0);
  int n = f.hi_;
  std::vector<cplx> e(n + 1);
  e[0] = std::exp(f.c_[0]);
  for (int k = 1; k <= n; ++k) {
    cplx s = 0;
    for (int j = 1; j <= k; ++j) s += double(j) * f.c_[j] * e[k - j];
    e[k] = s / double(k);
  }
  return Laurent(0, n, e);
}

Laurent Laurent::log() const {
  if (valuation() < 0) throw WindowError("log of a series with a pole");
  Laurent f = with_lo(0);
  if (f.hi_ < 0 || f.c_[0] == cplx(0)) throw WindowError("log of a series with zero constant term");
  int n = f.hi_;
  std::vector<cplx> l(n + 1);
  l[0] = std::log(f.c_[0]);
  for (int k = 1; k <= n; ++k) {
    cplx s = double(k) * f.c_[k];
    for (int j = 1; j < k; ++j) s -= double(j) * l[j] * f.c_[k - j];
    l[k] = s / (double(k) * f.c_[0]);
  }
  return Laurent(0, n, l);
}

Laurent Laurent::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  if (k == 0) return constant(1.0, hi_ - valuation());
  Laurent r = *this;
  for (int i = 1; i < k; ++i) r = r * *this;
  return r;
}

Laurent Laurent::sqrt() const {
  Laurent f = with_lo(0);
  if (valuation() < 0 || f.c_[0] == cplx(0)) throw WindowError("sqrt needs a nonzero constant term");
  int n = f.hi_;
  std::vector<cplx> s(n + 1);
  s[0] = std::sqrt(f.c_[0]);
  for (int k = 1; k <= n; ++k) {
    cplx t = f.c_[k];
    for (int j = 1; j < k; ++j) t -= s[j] * s[k - j];
    s[k] = t / (2.0 * s[0]);
  }
  return Laurent(0, n, s);
}

Laurent Laurent::compose(const Laurent& inner) const {
  int v = inner.valuation();
  if (v < 1) throw WindowError("compose needs an inner series of positive valuation");
  int v0 = valuation();
  Laurent g = (v0 >= 0) ? with_lo(0) : shifted(-v0).with_lo(0);
  int cap = std::min(inner.hi_, (g.hi_ + 1) * v - 1);
  Laurent in = inner.with_lo(v).truncated(cap);
  Laurent r = constant(g.c_[g.hi_ - g.lo_], cap);
  for (int k = g.hi_ - 1; k >= 0; --k) {
    r = (r * in).with_lo(0).truncated(cap);
    r.ref(0) += g.c_[k];
  }
  if (v0 < 0) r = r * in.pow(v0);
  return r;
}

Laurent Laurent::reversion() const {
  if (valuation() < 1) throw WindowError("reversion needs a series vanishing at 0");
  cplx s1 = (*this)[1];
  if (s1 == cplx(0)) throw WindowError("reversion needs a simple zero (vanishing linear coefficient)");
  int n = hi_;
  Laurent X = monomial(1.0, 1, n);
  Laurent t = X * (1.0 / s1);
  for (int it = 1; it < n; ++it) {
    Laurent err = compose(t) - X;
    t = t - err * (1.0 / s1);
  }
  return t;
}

cplx Laurent::eval(cplx z) const {
  cplx s = 0;
  for (int e = hi_; e >= lo_; --e) s = s * z + c_[e - lo_];
  return s * std::pow(z, lo_);
}

Laurent integrate_log(const Laurent& s, int times) {
  if (s.lo() <= 0 && s.hi() >= 0 && std::abs(s[0]) != 0.0)
    throw WindowError("integrate_log needs a zero constant term");
  Laurent r = s;
  for (int e = s.lo(); e <= s.hi(); ++e)
    if (e != 0) r.ref(e) /= std::pow(double(e), times);
  return r;
}

Laurent euler(const Laurent& s, int times) {
  Laurent r = s;
  for (int e = s.lo(); e <= s.hi(); ++e) r.ref(e) *= std::pow(double(e), times);
  return r;
}

// ------------------------------------------------------- TruncatedSeries

TruncatedSeries::TruncatedSeries(std::vector<std::string> vars, std::vector<int> min_deg, std::vector<int> max_deg,
                                 int max_total)
    : vars_(std::move(vars)), min_(std::move(min_deg)), max_(std::move(max_deg)), max_total_(max_total) {
  if (min_.size() != vars_.size() || max_.size() != vars_.size())
    throw WindowError("window length does not match variable count");
}

TruncatedSeries TruncatedSeries::constant(const TruncatedSeries& shape, cplx c) {
  TruncatedSeries r(shape.vars_, shape.min_, shape.max_, shape.max_total_);
  r.set(Exps(shape.nvars(), 0), c);
  return r;
}

TruncatedSeries TruncatedSeries::variable(const TruncatedSeries& shape, int var) {
  TruncatedSeries r(shape.vars_, shape.min_, shape.max_, shape.max_total_);
  Exps e(shape.nvars(), 0);
  e[var] = 1;
  r.set(e, 1.0);
  return r;
}

bool TruncatedSeries::in_window(const Exps& e) const {
  int tot = 0;
  for (int i = 0; i < nvars(); ++i) {
    if (e[i] < min_[i] || e[i] > max_[i]) return false;
    tot += e[i];
  }
  return max_total_ < 0 || tot <= max_total_;
}

cplx TruncatedSeries::coeff(const Exps& e) const {
  auto it = c_.find(e);
  return it == c_.end() ? cplx{} : it->second;
}

void TruncatedSeries::set(const Exps& e, cplx v) {
  if (static_cast<int>(e.size()) != nvars()) throw WindowError("exponent vector length mismatch");
  if (!in_window(e)) return;
  if (v == cplx(0))
    c_.erase(e);
  else
    c_[e] = v;
}

void TruncatedSeries::add_to(const Exps& e, cplx v) {
  if (!in_window(e)) return;
  c_[e] += v;
}

void TruncatedSeries::prune(double tol) {
  for (auto it = c_.begin(); it != c_.end();) {
    if (std::abs(it->second) <= tol)
      it = c_.erase(it);
    else
      ++it;
  }
}

TruncatedSeries TruncatedSeries::common_window(const TruncatedSeries& o) const {
  if (vars_ != o.vars_) throw WindowError("window mismatch: incompatible variable lists");
  std::vector<int> mn(nvars()), mx(nvars());
  for (int i = 0; i < nvars(); ++i) {
    mn[i] = std::max(min_[i], o.min_[i]);
    mx[i] = std::min(max_[i], o.max_[i]);
  }
  int tot = max_total_ < 0 ? o.max_total_ : (o.max_total_ < 0 ? max_total_ : std::min(max_total_, o.max_total_));
  return TruncatedSeries(vars_, mn, mx, tot);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  TruncatedSeries r = common_window(o);
  for (const auto& [e, v] : c_) r.add_to(e, v);
  for (const auto& [e, v] : o.c_) r.add_to(e, v);
  r.prune();
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const { return *this + o * cplx(-1.0); }

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  TruncatedSeries r = common_window(o);
  Exps e(nvars());
  for (const auto& [a, va] : c_)
    for (const auto& [b, vb] : o.c_) {
      for (int i = 0; i < nvars(); ++i) e[i] = a[i] + b[i];
      r.add_to(e, va * vb);
    }
  r.prune();
  return r;
}

TruncatedSeries TruncatedSeries::operator*(cplx s) const {
  TruncatedSeries r = *this;
  for (auto& [e, v] : r.c_) v *= s;
  r.prune();
  return r;
}

static void require_power_series(const TruncatedSeries& s, const char* what) {
  for (int i = 0; i < s.nvars(); ++i)
    if (s.min_deg()[i] < 0) throw WindowError(std::string(what) + " needs nonnegative windows");
}

TruncatedSeries TruncatedSeries::exp() const {
  require_power_series(*this, "exp");
  Exps zero(nvars(), 0);
  cplx c0 = coeff(zero);
  TruncatedSeries s = *this;
  s.c_.erase(zero);
  TruncatedSeries result = constant(*this, 1.0);
  TruncatedSeries term = result;
  for (int k = 1; !term.c_.empty(); ++k) {
    term = term * s * cplx(1.0 / k);
    result = result + term;
  }
  return result * std::exp(c0);
}

TruncatedSeries TruncatedSeries::log() const {
  require_power_series(*this, "log");
  Exps zero(nvars(), 0);
  cplx c0 = coeff(zero);
  if (c0 == cplx(0)) throw WindowError("log of a series with zero constant term");
  TruncatedSeries u = *this * (1.0 / c0);
  u.set(zero, 0.0);
  TruncatedSeries result = constant(*this, std::log(c0));
  TruncatedSeries term = u;
  for (int k = 1; !term.c_.empty(); ++k) {
    result = result + term * cplx((k % 2 ? 1.0 : -1.0) / k);
    term = term * u;
  }
  return result;
}

TruncatedSeries TruncatedSeries::compose(const std::vector<TruncatedSeries>& subs) const {
  if (static_cast<int>(subs.size()) != nvars()) throw WindowError("compose needs one substitution per variable");
  for (const auto& s : subs) {
    require_power_series(s, "compose");
    if (s.vars_ != subs[0].vars_) throw WindowError("substitutions must share variables");
    if (s.coeff(Exps(s.nvars(), 0)) != cplx(0)) throw WindowError("compose needs positive-valuation inner series");
  }
  for (int i = 0; i < nvars(); ++i)
    if (min_[i] < 0) throw WindowError("compose of a Laurent outer series");
  TruncatedSeries shape = subs[0];
  for (const auto& s : subs) shape = shape.common_window(s);
  TruncatedSeries result(shape.vars_, shape.min_, shape.max_, shape.max_total_);
  std::vector<std::vector<TruncatedSeries>> powers(nvars());
  auto power = [&](int i, int k) -> const TruncatedSeries& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(constant(result, 1.0));
    while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * subs[i]);
    return pw[k];
  };
  for (const auto& [e, v] : c_) {
    TruncatedSeries t = constant(result, v);
    for (int i = 0; i < nvars(); ++i)
      if (e[i] > 0) t = t * power(i, e[i]);
    result = result + t;
  }
  return result;
}

cplx TruncatedSeries::residue(int var) const {
  if (nvars() != 1 || var != 0) throw WindowError("residue is defined for univariate series");
  return coeff(Exps{-1});
}

std::string TruncatedSeries::dump() const {
  std::ostringstream os;
  char buf[96];
  for (const auto& [e, v] : c_) {
    os << "(";
    for (int i = 0; i < nvars(); ++i) os << (i ? "," : "") << e[i];
    std::snprintf(buf, sizeof buf, "): %.17g,%.17g\n", v.real(), v.imag());
    os << buf;
  }
  return os.str();
}

double TruncatedSeries::max_abs_diff(const TruncatedSeries& o) const {
  double m = 0;
  for (const auto& [e, v] : c_) m = std::max(m, std::abs(v - o.coeff(e)));
  for (const auto& [e, v] : o.c_) m = std::max(m, std::abs(v - coeff(e)));
  return m;
}

}  // namespace ocgw
