#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ocgw/eo.hpp"
#include "ocgw/orbifold.hpp"

namespace ocgw {

// (1,1,0,1), (1,1,0,2), (2,1,0,1), (1,2,0,1), (1,3,0,1), (3,1,1,1), (2,2,0,1)
const std::vector<OrbifoldInput>& catalog();
std::string input_name(const OrbifoldInput& in);

// [z^k] R(-z)^beta_alpha against [u^-k] f^alpha_beta(u, 0)
CheckReport bridge_check(const OrbifoldData& data, int K = 8);
// symplectic defect of R, edge remainder, and check-B against the A-model edge weights
CheckReport edges_check(const OrbifoldData& data, int K = 4);
// xi_{beta,0} / xi-tilde^beta_0 = sqrt(-2/(w1 w2 w3)) for every coefficient
CheckReport xi_check(const OrbifoldData& data, int D = 6);
// per-graph w_B / w_A over the stable sectors of the sweep
CheckReport graphs_check(const OrbifoldData& data, int L = 2, int D = 5);
// F-check_{g,n} against (-1)^{g-1+n}|G|^n F_{g,n}
CheckReport main_check(const OrbifoldData& data, int g, int n, int L = 2, int D = 5);
CheckReport stirling_summary(const OrbifoldData& data, int M = 4);

struct Criterion {
  int id = 0;
  bool ok = false;
  std::string what;
  std::string detail;
};

// all eleven criteria over the catalog; `each` sees every line as soon as it is decided
std::vector<Criterion> run_acceptance(const std::function<void(const Criterion&)>& each = {});

}  // namespace ocgw
