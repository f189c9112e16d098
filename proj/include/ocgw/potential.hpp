#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ocgw/graphs.hpp"
#include "ocgw/json_out.hpp"
#include "ocgw/orbifold.hpp"
#include "ocgw/series.hpp"

namespace ocgw {

enum class Basis { Prime, Psi };

// tau exponent vectors of total degree <= L in p variables, graded then lexicographic (descending)
std::vector<std::vector<int>> tau_monomials(int p, int L);

// Coefficient table of F_{g,n}: [tau monomial][leg 1]...[leg n] with leg index c*D + (d-1),
// where c is the monodromy k (prime basis, class 1'_{-k/m}) or the puncture label l (psi basis).
struct PotentialSeries {
  int g = 0, n = 0, p = 0, m = 1, D = 1, L = 0;
  Basis basis = Basis::Prime;
  std::vector<std::vector<int>> monomials;
  std::vector<cplx> data;
  ojson meta = ojson::object();

  PotentialSeries() = default;
  PotentialSeries(int g, int n, int p, int m, int D, int L, Basis b);

  int leg_size() const { return m * D; }
  std::size_t block() const;  // entries per monomial
  int monomial_index(const std::vector<int>& e) const;
  cplx& at(int mon, const std::vector<int>& legs);
  cplx at(int mon, const std::vector<int>& legs) const;
  // (d, class) per leg
  cplx coeff(const std::vector<int>& tau, const std::vector<std::pair<int, int>>& legs) const;

  PotentialSeries to_psi() const;
  PotentialSeries& operator+=(const PotentialSeries& o);
  PotentialSeries scaled(cplx s) const;
  double max_abs() const;
  ojson to_json(double drop_below = 0.0) const;
};

// in-place prime -> psi conversion of every leg of a [monomial][legs] array
void legs_prime_to_psi(std::vector<cplx>& v, int n, int m, int D);

// max over coefficients of |a - s b| / max(|a|, |s b|); coefficients below rel_floor * scale are compared
// on the overall scale instead (structural zeros carry only rounding noise)
double relative_deviation(const PotentialSeries& a, const PotentialSeries& b, cplx s, double rel_floor = 1e-12);

// Tables that define a graph weight with vertex marking alpha:
//   global * prod_v psi * vertex_base^{2g-2+val} * prod_e edge * prod dilaton * prod primary * prod open.
struct WeightTables {
  int order = 1;  // |G|, markings range over [0, order)
  int p = 0;
  int leg_size = 1;
  int K = 0;  // heights 0..K available
  cplx vertex_base{1.0, 0.0};
  std::vector<cplx> edge;                  // [a][b][k][l]
  std::vector<cplx> dilaton;               // [a][k]
  std::vector<cplx> primary;               // [a][k][p]
  std::vector<cplx> open;                  // [a][k][leg]

  cplx E(int a, int b, int k, int l) const { return edge[((a * order + b) * (K + 1) + k) * (K + 1) + l]; }
  cplx Dl(int a, int k) const { return dilaton[a * (K + 1) + k]; }
  const cplx* P(int a, int k) const { return &primary[(a * (K + 1) + k) * p]; }
  const cplx* O(int a, int k) const { return &open[(a * (K + 1) + k) * leg_size]; }
};

// Contribution of one graph at a fixed marking assignment, divided by |Aut|, added into out
// (layout [monomial of degree exactly l][legs], monomials from tau_monomials(p, l) filtered to degree l).
void add_graph_weight(const DecoratedGraph& gr, const std::vector<int>& alpha, const WeightTables& t, cplx global,
                      std::vector<cplx>& out);

// Sum over graphs and markings, block-parallel with a fixed reduction order.
void sum_graphs(const std::vector<DecoratedGraph>& graphs, const WeightTables& t, cplx global, int l,
                PotentialSeries& target);

int workers();
void set_workers(int n);  // 0 restores the default (env OCGW_WORKERS or hardware)

}  // namespace ocgw
