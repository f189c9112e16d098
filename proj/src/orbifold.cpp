#include "ocgw/orbifold.hpp"

#include <cmath>
#include <numbers>

#include "json.hpp"

namespace ocgw {

long long floor_q(const Q& x) {
  long long n = x.numerator(), d = x.denominator();
  long long q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

Q frac(const Q& x) { return x - Q(floor_q(x)); }

double to_double(const Q& x) {
  return static_cast<double>(x.numerator()) / static_cast<double>(x.denominator());
}

cplx turn(const Q& t) {
  Q f = frac(t);
  // exact values at quarter turns keep orthogonality sums clean
  if (f == Q(0)) return {1.0, 0.0};
  if (f == Q(1, 2)) return {-1.0, 0.0};
  if (f == Q(1, 4)) return {0.0, 1.0};
  if (f == Q(3, 4)) return {0.0, -1.0};
  double a = 2.0 * std::numbers::pi * to_double(f);
  return {std::cos(a), std::sin(a)};
}

void validate(const OrbifoldInput& in) {
  if (in.r <= 0) throw ValidationError("r must be a positive integer");
  if (in.m <= 0) throw ValidationError("m must be a positive integer");
  if (in.s < 0 || in.s >= in.r) throw ValidationError("s must lie in [0, r)");
  if (in.f <= 0) throw ValidationError("f must be a positive integer");
}

OrbifoldData::OrbifoldData(const OrbifoldInput& in) : in_(in) {
  validate(in);
  const int r = in.r, m = in.m;
  order_ = r * m;
  w_[0] = Q(1, r);
  w_[1] = Q(in.s + static_cast<long long>(r) * in.f, static_cast<long long>(r) * m);
  w_[2] = -w_[0] - w_[1];
  const std::array<Q, 3> v{Q(0), Q(1, m), Q(-1, m)};
  elems_.resize(order_);
  for (int j = 0; j < r; ++j)
    for (int l = 0; l < m; ++l) {
      GroupElement& e = elems_[j * m + l];
      e.j = j;
      e.l = l;
      Q sum(0);
      for (int i = 0; i < 3; ++i) {
        e.c[i] = frac(Q(j) * w_[i] + Q(l) * v[i]);
        sum += e.c[i];
      }
      if (sum.denominator() != 1) throw std::logic_error("non-integral age");
      e.age = static_cast<int>(sum.numerator());
    }
  eta1_ = lookup(frac(w_[0]), frac(w_[1]));
  eta2_ = index_of(0, m > 1 ? 1 : 0);
  int a = 1;
  for (int h = 0; h < order_; ++h) {
    const GroupElement& e = elems_[h];
    if (e.age == 2) ++genus_;
    if (e.age != 1) continue;
    Age1Element t;
    t.a = a++;
    t.index = h;
    t.j = e.j;
    t.l = e.l;
    Q ma = Q(r) * e.c[0];
    Q na = -Q(in.s) * e.c[0] + Q(m) * e.c[1];
    if (ma.denominator() != 1 || na.denominator() != 1) throw std::logic_error("non-integral lattice label");
    t.m_a = ma.numerator();
    t.n_a = na.numerator();
    age1_.push_back(t);
  }
}

int OrbifoldData::index_of(int j, int l) const {
  if (j < 0 || j >= in_.r || l < 0 || l >= in_.m) throw std::out_of_range("group index out of range");
  return j * in_.m + l;
}

int OrbifoldData::lookup(const Q& c1, const Q& c2) const {
  // c1 = j/r fixes j, then c2 fixes l
  Q jq = c1 * Q(in_.r);
  int j = static_cast<int>(jq.numerator());
  for (int l = 0; l < in_.m; ++l) {
    const GroupElement& e = elems_[j * in_.m + l];
    if (e.c[1] == c2) return j * in_.m + l;
  }
  throw std::logic_error("element lookup failed");
}

int OrbifoldData::mul(int h1, int h2) const {
  const GroupElement& a = element(h1);
  const GroupElement& b = element(h2);
  return lookup(frac(a.c[0] + b.c[0]), frac(a.c[1] + b.c[1]));
}

int OrbifoldData::inv(int h) const {
  const GroupElement& a = element(h);
  return lookup(frac(-a.c[0]), frac(-a.c[1]));
}

int OrbifoldData::pow(int h, long long e) const {
  const GroupElement& a = element(h);
  return lookup(frac(Q(e) * a.c[0]), frac(Q(e) * a.c[1]));
}

void OrbifoldData::character_indices(int alpha, int& j, int& l) const {
  if (alpha < 0 || alpha >= order_) throw std::out_of_range("character index out of range");
  j = alpha / in_.m;
  l = alpha % in_.m;
}

Q OrbifoldData::char_turn(int alpha, int h) const {
  int j, l;
  character_indices(alpha, j, l);
  const GroupElement& e = element(h);
  return frac(Q(j) * e.c[0] + Q(l) * e.c[1]);
}

cplx OrbifoldData::character(int alpha, int h) const { return turn(char_turn(alpha, h)); }

int OrbifoldData::winding_element(long long d0, int k) const {
  if (d0 <= 0) throw ValidationError("winding d0 must be positive");
  if (k < 0 || k >= in_.m) throw ValidationError("class k must lie in [0, m)");
  Q c1 = frac(Q(d0) * w_[0]);
  Q c2 = frac(Q(d0) * w_[1] - Q(k, in_.m));
  return lookup(c1, c2);
}

cplx OrbifoldData::w_power(const std::array<double, 3>& e) const {
  double mod = 1.0;
  for (int i = 0; i < 3; ++i) mod *= std::pow(std::abs(wd(i)), e[i]);
  double ph = std::numbers::pi * e[2];
  return mod * cplx(std::cos(ph), std::sin(ph));
}

cplx OrbifoldData::w_power(const std::array<Q, 3>& e) const {
  cplx ph = turn(e[2] / Q(2));
  double mod = 1.0;
  for (int i = 0; i < 3; ++i) mod *= std::pow(std::abs(wd(i)), to_double(e[i]));
  return mod * ph;
}

double OrbifoldData::abs_w123() const { return std::abs(wd(0) * wd(1) * wd(2)); }

cplx OrbifoldData::sqrt_w123() const { return {0.0, std::sqrt(abs_w123())}; }

static std::string qstr(const Q& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string OrbifoldData::to_json() const {
  nlohmann::ordered_json j;
  j["r"] = in_.r;
  j["m"] = in_.m;
  j["s"] = in_.s;
  j["f"] = in_.f;
  j["order"] = order_;
  j["w"] = nlohmann::ordered_json::array({qstr(w_[0]), qstr(w_[1]), qstr(w_[2])});
  auto els = nlohmann::ordered_json::array();
  for (const auto& e : elems_) {
    nlohmann::ordered_json x;
    x["j"] = e.j;
    x["l"] = e.l;
    x["c"] = nlohmann::ordered_json::array({qstr(e.c[0]), qstr(e.c[1]), qstr(e.c[2])});
    x["age"] = e.age;
    els.push_back(x);
  }
  j["elements"] = els;
  auto a1 = nlohmann::ordered_json::array();
  for (const auto& t : age1_) {
    nlohmann::ordered_json x;
    x["a"] = t.a;
    x["j"] = t.j;
    x["l"] = t.l;
    x["m_a"] = t.m_a;
    x["n_a"] = t.n_a;
    a1.push_back(x);
  }
  j["age1"] = a1;
  j["genus"] = genus_;
  j["p"] = p();
  j["punctures"] = punctures();
  return j.dump();
}

std::vector<cplx> prime_to_psi_coords(const std::vector<cplx>& a) {
  const int m = static_cast<int>(a.size());
  if (m == 0) throw ValidationError("empty class vector");
  std::vector<cplx> b(m);
  for (int l = 0; l < m; ++l)
    for (int k = 0; k < m; ++k) b[l] += a[k] * turn(Q(-k * l, m));
  return b;
}

std::vector<cplx> psi_to_prime_coords(const std::vector<cplx>& b) {
  const int m = static_cast<int>(b.size());
  if (m == 0) throw ValidationError("empty class vector");
  std::vector<cplx> a(m);
  for (int k = 0; k < m; ++k) {
    for (int l = 0; l < m; ++l) a[k] += b[l] * turn(Q(k * l, m));
    a[k] /= double(m);
  }
  return a;
}

std::vector<cplx> basis_change(const std::vector<cplx>& values) {
  const int m = static_cast<int>(values.size());
  if (m == 0) throw ValidationError("empty class vector");
  std::vector<cplx> out(m);
  for (int l = 0; l < m; ++l) {
    for (int k = 0; k < m; ++k) out[l] += values[k] * turn(Q(-k * l, m));
    out[l] /= double(m);
  }
  return out;
}

std::vector<cplx> basis_change_inverse(const std::vector<cplx>& values) {
  const int m = static_cast<int>(values.size());
  if (m == 0) throw ValidationError("empty class vector");
  std::vector<cplx> out(m);
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l) out[k] += values[l] * turn(Q(k * l, m));
  return out;
}

}  // namespace ocgw
