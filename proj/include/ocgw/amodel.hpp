#pragma once

#include <vector>

#include "ocgw/graphs.hpp"
#include "ocgw/orbifold.hpp"
#include "ocgw/potential.hpp"

namespace ocgw {

// Matrix-valued series coefficients M[a][b][k], k = 0..K.
struct SeriesMatrix {
  int order = 1;
  int K = 0;
  std::vector<cplx> c;

  SeriesMatrix() = default;
  SeriesMatrix(int order_, int K_) : order(order_), K(K_), c(static_cast<std::size_t>(order_) * order_ * (K_ + 1)) {}
  cplx operator()(int a, int b, int k) const { return c[(static_cast<std::size_t>(a) * order + b) * (K + 1) + k]; }
  cplx& ref(int a, int b, int k) { return c[(static_cast<std::size_t>(a) * order + b) * (K + 1) + k]; }
};

// R(z)^alpha_beta, coefficient of z^k
SeriesMatrix r_matrix(const OrbifoldData& data, int K);
// max_{a,b,k} |[z^k] (sum_g R(z)^g_a R(-z)^g_b - delta_ab)|
double symplectic_defect(const SeriesMatrix& R);

// Quotient [z^k w^l] (delta_ab - sum_g S^g_a(z) S^g_b(w)) / (z+w) for k,l <= K, from S given as S(g,a,k).
// S needs order >= 2K+1. Layout [a][b][k][l]. remainder receives max |N(z,-z)| coefficient.
std::vector<cplx> edge_quotient(const SeriesMatrix& S, int K, double* remainder = nullptr);
// A-model edge weights E^{ab}_{kl} from R
std::vector<cplx> edge_weights_A(const OrbifoldData& data, int K, double* remainder = nullptr);

// D'(d0, k) with v = 1
cplx disk_function(const OrbifoldData& data, long long d0, int k);
// Phi^h_a(X): leg vector [k*D + d-1] (prime basis, class 1'_{-k/m})
std::vector<cplx> phi_series(const OrbifoldData& data, int h, int a, int D);
// xi-tilde^gamma_a(X), same layout; a >= -2
std::vector<cplx> xi_tilde(const OrbifoldData& data, int gamma, int a, int D);

WeightTables weight_tables_A(const OrbifoldData& data, int K, int D);

// F_{g,n} at tau-degree <= L and windings <= D, prime basis
PotentialSeries f_gn_A(const OrbifoldData& data, int g, int n, int L, int D);
// the graph-free (0,1) and (0,2) terms alone
PotentialSeries unstable_A(const OrbifoldData& data, int n, int L, int D);
// (0,1) graph-free terms straight from Phi^1_{-2} + sum_a tau_a Phi^{h_a}_{-1}
PotentialSeries disk_direct_A(const OrbifoldData& data, int L, int D);

}  // namespace ocgw
