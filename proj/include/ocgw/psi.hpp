#pragma once

#include <vector>

#include "ocgw/special.hpp"

namespace ocgw {

// <tau_{k1} ... tau_{kn}>_g on Mbar_{g,n}, exact; memoized and thread-safe
BigQ psi_intersection(int g, std::vector<int> ks);
double psi_intersection_d(int g, const std::vector<int>& ks);

// slow reference: plain DVV recursion pivoting on the first insertion with k >= 1;
// no string or dilaton shortcuts, separate per-thread table
BigQ psi_intersection_reference(int g, const std::vector<int>& ks);

std::string to_string(const BigQ& q);

}  // namespace ocgw
