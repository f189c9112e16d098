#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ocgw/json_out.hpp"
#include "ocgw/orbifold.hpp"
#include "ocgw/potential.hpp"
#include "ocgw/series.hpp"

namespace ocgw {

// r = 1 only: the q = 0 curve X = -t^f (t^m + 1), Y = t
bool curve_supported(const OrbifoldData& data);

// sum of c * prod_i dt_i / (t_i - t_{beta_i})^{k_i}; key = (beta_1, k_1, ..., beta_n, k_n)
using LegKey = std::vector<int>;
using Omega = std::map<LegKey, cplx>;

class SpectralCurve {
 public:
  explicit SpectralCurve(const OrbifoldData& data, int window = 24);

  const OrbifoldData& data() const { return data_; }
  int order() const { return m_; }  // branch points = |G| = m
  int m() const { return m_; }
  int f() const { return f_; }
  int window() const { return window_; }

  cplx X(cplx t) const;
  cplx branch_t(int a) const { return tb_[a]; }
  cplx branch_X(int a) const { return X(tb_[a]); }
  cplx puncture(int l) const;
  // h_1 from the local expansion y = y_a + h_1 zeta + ..., one per branch point
  cplx h1_local(int a) const { return h1_[a]; }
  double h1() const { return h1_[0].real(); }

  // t - t_a as a series in zeta_a (valuation 1), and its derivative
  const Laurent& s(int a) const { return s_[a]; }
  const Laurent& ds(int a) const { return ds_[a]; }
  // dt / (t - t_b)^k divided by d zeta_a, expanded at branch point a
  Laurent leg(int a, int b, int k) const;
  // t - t_l as a series in X near puncture l
  const Laurent& sigma(int l) const { return sigma_[l]; }

  // evaluation of a one-leg form at branch chart a (coefficient of d zeta)
  Laurent at_branch(const Omega& one_leg, int a) const;
  // evaluation of a one-leg form at puncture l (coefficient of dX), X^0..X^{D-1}
  Laurent at_puncture(const Omega& one_leg, int l, int D) const;

 private:
  OrbifoldData data_;
  int m_ = 1, f_ = 1, window_ = 24;
  std::vector<cplx> tb_;
  std::vector<cplx> h1_;
  std::vector<Laurent> s_, ds_, sigma_;
  mutable std::map<std::array<int, 3>, Laurent> legs_;
};

// closed-form branch points against numeric roots of (f+m) t^m + f (Durand-Kerner)
std::vector<cplx> branch_points_numeric(const OrbifoldData& data);

// theta^a_d as a one-leg form; leading term -(2d+1)!!/(2^d zeta^{2d+2})
Omega theta_form(const SpectralCurve& c, int a, int d);
// check-B^{ab}_{kl} from the zeta expansion of the Bergman kernel, layout [a][b][k][l]
std::vector<cplx> b_check_curve(const SpectralCurve& c, int K);
// -sum_a theta^a_0 theta^a_0 theta^a_0 / (2 h_1)
Omega pants(const SpectralCurve& c);

struct RecursionInfo {
  int window = 0;
  double kernel_sign = 1.0;
  double calibration = 0.0;  // omega_{0,3} / pants before fixing the sign
};

// omega_{g,n} by residues; the window grows on exhaustion up to 64
Omega omega_gn(const OrbifoldData& data, int g, int n, RecursionInfo* info = nullptr, int window = 24);
// the same graphs as the B-model sum with open leaves replaced by theta forms
Omega doss_sum(const SpectralCurve& c, int g, int n);

double omega_deviation(const Omega& a, const Omega& b);
double omega_symmetry_defect(const Omega& w, int n);

// F-check_{g,n}(0; X) in the psi basis; (0,1) and (0,2) included
PotentialSeries expand_potential(const SpectralCurve& c, const Omega& w, int g, int n, int D);
PotentialSeries eo_potential(const OrbifoldData& data, int g, int n, int D);

struct CheckReport {
  std::string name;
  double deviation = 0.0;
  double tol = 0.0;
  bool ok = false;
  ojson detail = ojson::object();
};

CheckReport pants_check(const OrbifoldData& data);
CheckReport doss_check(const OrbifoldData& data, int g, int n);
CheckReport c_kernel_check(const SpectralCurve& c);
// theta^a_{k+1} + d(theta^a_k/dx) + sum_b Bcheck_{k,0} theta^b_0 at every branch chart, k <= kmax
CheckReport xi_recursion_check(const SpectralCurve& c, int kmax = 1);
// theta_k = d xi-hat_k - sum Bcheck d xi-hat_i at every puncture, k <= kmax
CheckReport xihxi_check(const SpectralCurve& c, int kmax = 2, int D = 8);
// leading coefficient, zero residue, and int theta^b_0 against xi_expansion
CheckReport theta_check(const SpectralCurve& c, int dmax = 3, int D = 6);
// Bcheck from the curve against the f-matrix route
CheckReport b_check_consistency(const SpectralCurve& c, int K = 3);

}  // namespace ocgw
