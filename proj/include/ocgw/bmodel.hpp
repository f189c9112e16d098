#pragma once

#include <vector>

#include "ocgw/amodel.hpp"
#include "ocgw/orbifold.hpp"
#include "ocgw/potential.hpp"

namespace ocgw {

// [u^{-k}] f^alpha_beta(u, 0) as M(alpha, beta, k)
SeriesMatrix f_matrix(const OrbifoldData& data, int K);
// h_1(0) = (1/|G|) sqrt(-2/(w1 w2 w3)), real positive
double h1_zero(const OrbifoldData& data);
// [u^{-k}] of check-h^alpha(u, 0): closed form, and via sum_beta f^alpha_beta h_1
std::vector<cplx> h_check_series(const OrbifoldData& data, int alpha, int K);
std::vector<cplx> h_check_from_f(const OrbifoldData& data, int alpha, int K);
// check-B^{ab}_{kl}(0), layout [a][b][k][l], k,l <= K
std::vector<cplx> b_check_table(const OrbifoldData& data, int K, double* remainder = nullptr);
cplx b_check(const OrbifoldData& data, int alpha, int beta, int k, int l);

// xi^{l-}_{beta,0}: X^d coefficients, d = 1..D (index d-1)
std::vector<cplx> xi_expansion(const OrbifoldData& data, int beta, int l, int D);
// sum_l xi^{l-}_{beta,0} psi_l as a leg vector [l*D + d-1]
std::vector<cplx> xi_expansion_psi(const OrbifoldData& data, int beta, int D);

// Critical values X_alpha, Y_alpha under the fixed branches
cplx critical_X(const OrbifoldData& data, int alpha);
cplx critical_Y(const OrbifoldData& data, int alpha);

// Oscillatory integral of Phi over gamma_alpha at real u, q-series truncated at total degree Qdeg
cplx oscillatory_phi(const OrbifoldData& data, int alpha, double u, int Qdeg, const std::vector<cplx>& q);
// limit q -> 0 of the integral of nabla_h Phi
cplx oscillatory_nabla(const OrbifoldData& data, int alpha, int h, double u);
// f^alpha_beta(u, 0) rebuilt from the oscillatory integrals
cplx f_from_oscillatory(const OrbifoldData& data, int alpha, int beta, double u);
// f^alpha_beta(u, 0) from the truncated series
cplx f_series_value(const SeriesMatrix& f, int alpha, int beta, double u);

struct StirlingReport {
  std::vector<double> u;
  std::vector<double> deviation;
  std::vector<double> ratio;  // deviation[i] / deviation[i+1]
  bool ok = false;
};
StirlingReport stirling_check(const OrbifoldData& data, int h, const std::vector<double>& u, int M);

// sqrt2 replaces the fixed branch of sqrt(-2) everywhere it enters (negative control only)
WeightTables weight_tables_B(const OrbifoldData& data, int K, int D, cplx sqrt2 = sqrt_m2());

struct UnstableSource {
  bool use_curve = true;  // eo engine where supported
};

PotentialSeries f_gn_B(const OrbifoldData& data, int g, int n, int L, int D, UnstableSource src = {});
PotentialSeries unstable_B(const OrbifoldData& data, int n, int L, int D, UnstableSource src = {});

struct GraphRatioReport {
  long long graphs = 0;
  long long weighted = 0;  // (graph, marking) pairs with a nonzero weight
  double max_deviation = 0.0;
  std::string worst;
};
// per-graph and per-marking comparison of w_B with (-1)^{g-1+n}|G|^n w_A
GraphRatioReport per_graph_ratio(const OrbifoldData& data, int g, int n, int L, int D);

}  // namespace ocgw
