#pragma once

#include <vector>

#include "ocgw/orbifold.hpp"
#include "ocgw/series.hpp"

namespace ocgw {

struct MirrorMapSeries {
  int p = 0;
  int degree = 0;
  std::vector<TruncatedSeries> tau;      // tau_a(q), a = 1..p stored from 0
  std::vector<TruncatedSeries> inverse;  // q_a(tau)
};

// multi-indices d with sum d_b <= max_sum and every sum_b d_b c_i(h_b) an integer.
// the fast route walks residues mod |G|; the brute route tests every index
std::vector<std::vector<int>> mirror_degrees(const OrbifoldData& data, int max_sum);
std::vector<std::vector<int>> mirror_degrees_brute(const OrbifoldData& data, int max_sum);

// coefficient of q^d in tau_a / q_a
double mirror_coefficient(const OrbifoldData& data, int a, const std::vector<int>& d);

MirrorMapSeries mirror_map_series(const OrbifoldData& data, int degree);

// max |tau(q(tau)) - tau| over the window
double mirror_round_trip(const MirrorMapSeries& s);

}  // namespace ocgw
