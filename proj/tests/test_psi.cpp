#include "doctest.h"

#include <algorithm>

#include "ocgw/psi.hpp"

using namespace ocgw;

namespace {
// all ks with sum 3g-3+n, sorted non-increasing
void keys(int n, int sum, int maxk, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    if (sum == 0) out.push_back(cur);
    return;
  }
  for (int k = std::min(sum, maxk); k >= 0; --k) {
    cur.push_back(k);
    keys(n, sum - k, k, cur, out);
    cur.pop_back();
  }
}
}  // namespace

TEST_CASE("base values") {
  CHECK(psi_intersection(0, {0, 0, 0}) == BigQ(1));
  CHECK(psi_intersection(1, {1}) == BigQ(1, 24));
  CHECK(psi_intersection(2, {0, 0, 5}) == BigQ(0));
  CHECK(psi_intersection(2, {4}) == BigQ(1, 1152));
  CHECK(psi_intersection(3, {7}) == BigQ(1, 82944));
  CHECK_THROWS(psi_intersection(0, {0, 0}));
}

TEST_CASE("string, dilaton, symmetry and the slow oracle for g <= 3, n <= 5") {
  for (int g = 0; g <= 3; ++g)
    for (int n = 1; n <= 5; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      std::vector<std::vector<int>> ks;
      std::vector<int> cur;
      keys(n, 3 * g - 3 + n, 3 * g - 3 + n, cur, ks);
      for (auto k : ks) {
        INFO("g=" << g << " n=" << n);
        BigQ v = psi_intersection(g, k);
        CHECK(v == psi_intersection_reference(g, k));
        auto p = k;
        std::reverse(p.begin(), p.end());
        CHECK(psi_intersection(g, p) == v);
        // string: append tau_0
        if (2 * g - 2 + n > 0) {
          auto k0 = k;
          k0.push_back(0);
          BigQ rhs = 0;
          for (int j = 0; j < n; ++j)
            if (k[j] > 0) {
              auto q = k;
              --q[j];
              rhs += psi_intersection(g, q);
            }
          CHECK(psi_intersection(g, k0) == rhs);
          auto k1 = k;
          k1.push_back(1);
          CHECK(psi_intersection(g, k1) == BigQ(2 * g - 2 + n) * v);
        }
      }
    }
}
