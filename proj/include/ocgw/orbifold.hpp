#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace ocgw {

using Q = boost::rational<long long>;
using cplx = std::complex<double>;

struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// fractional part in [0,1)
Q frac(const Q& x);
long long floor_q(const Q& x);
double to_double(const Q& x);
// exp(2 pi i t)
cplx turn(const Q& t);

struct OrbifoldInput {
  int r = 1;
  int m = 1;
  int s = 0;
  int f = 1;
};

void validate(const OrbifoldInput& in);

struct GroupElement {
  int j = 0;
  int l = 0;
  std::array<Q, 3> c{};
  int age = 0;
};

struct Age1Element {
  int a = 0;        // 1-based tau index
  int index = 0;    // element index
  int j = 0;
  int l = 0;
  long long m_a = 0;
  long long n_a = 0;
};

class OrbifoldData {
 public:
  explicit OrbifoldData(const OrbifoldInput& in);

  const OrbifoldInput& input() const { return in_; }
  int order() const { return order_; }
  int r() const { return in_.r; }
  int m() const { return in_.m; }
  const std::array<Q, 3>& w() const { return w_; }
  double wd(int i) const { return to_double(w_[i]); }

  // elements and characters share the index j*m + l
  const std::vector<GroupElement>& elements() const { return elems_; }
  const GroupElement& element(int h) const { return elems_.at(h); }
  int index_of(int j, int l) const;
  int identity() const { return 0; }
  int eta1() const { return eta1_; }
  int eta2() const { return eta2_; }
  int mul(int h1, int h2) const;
  int inv(int h) const;
  int pow(int h, long long e) const;

  // chi_alpha(h) as a turn fraction in [0,1)
  Q char_turn(int alpha, int h) const;
  cplx character(int alpha, int h) const;
  void character_indices(int alpha, int& j, int& l) const;

  // h(d0,k) = eta1^d0 eta2^-k
  int winding_element(long long d0, int k) const;

  const std::vector<Age1Element>& age1() const { return age1_; }
  int p() const { return static_cast<int>(age1_.size()); }
  int genus() const { return genus_; }
  int punctures() const { return p() - genus_ + 3; }

  // prod_i w_i^{e_i} under the branch w3^c = |w3|^c e^{i pi c}
  cplx w_power(const std::array<Q, 3>& e) const;
  cplx w_power(const std::array<double, 3>& e) const;
  // sqrt(w1 w2 w3) = i sqrt|w1 w2 w3|
  cplx sqrt_w123() const;
  double abs_w123() const;

  std::string to_json() const;

 private:
  int lookup(const Q& c1, const Q& c2) const;

  OrbifoldInput in_;
  int order_ = 1;
  std::array<Q, 3> w_{};
  std::vector<GroupElement> elems_;
  std::vector<Age1Element> age1_;
  int genus_ = 0;
  int eta1_ = 0;
  int eta2_ = 0;
};

// sqrt(-2) = i sqrt 2
inline cplx sqrt_m2() { return cplx(0.0, std::sqrt(2.0)); }

// 1'-basis coordinates <-> psi-basis coordinates for vectors in H*_CR(B mu_m).
// prime coordinates are indexed by the monodromy k (basis vector 1'_{-k/m}).
std::vector<cplx> prime_to_psi_coords(const std::vector<cplx>& a);
std::vector<cplx> psi_to_prime_coords(const std::vector<cplx>& b);
// Transforms values of a linear functional on {1'_{k/m}} into its values on {psi_l}.
std::vector<cplx> basis_change(const std::vector<cplx>& values);
std::vector<cplx> basis_change_inverse(const std::vector<cplx>& values);

}  // namespace ocgw
