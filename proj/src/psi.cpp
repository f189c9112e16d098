#include "ocgw/psi.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>

namespace ocgw {

namespace {

BigQ dfact(int n) {  // n!! for odd n >= -1
  BigQ v(1);
  for (int i = n; i > 1; i -= 2) v *= i;
  return v;
}

bool stable(int g, int n) { return 2 * g - 2 + n > 0; }

bool dimension_ok(int g, const std::vector<int>& ks) {
  int n = static_cast<int>(ks.size());
  int s = 0;
  for (int k : ks) {
    if (k < 0) return false;
    s += k;
  }
  return s == 3 * g - 3 + n;
}

// Sum over splittings of `rest` into I, J and g1 + g2 = g, of <tau_r tau_I>_{g1} <tau_s tau_J>_{g2}.
template <class F>
BigQ split_sum(int g, int r, int s, const std::vector<int>& rest, F&& eval) {
  BigQ total(0);
  const int n = static_cast<int>(rest.size());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> I{r}, J{s};
    for (int i = 0; i < n; ++i) (mask >> i & 1u ? I : J).push_back(rest[i]);
    for (int g1 = 0; g1 <= g; ++g1) {
      int g2 = g - g1;
      if (!stable(g1, static_cast<int>(I.size())) || !stable(g2, static_cast<int>(J.size()))) continue;
      BigQ a = eval(g1, I);
      if (a == 0) continue;
      total += a * eval(g2, J);
    }
  }
  return total;
}

// DVV with pivot tau_{k+1} and remaining insertions `rest`
template <class F>
BigQ dvv(int g, int k, const std::vector<int>& rest, F&& eval) {
  BigQ total(0);
  for (std::size_t j = 0; j < rest.size(); ++j) {
    std::vector<int> t = rest;
    int dj = t[j];
    t[j] = dj + k;
    total += dfact(2 * k + 2 * dj + 1) / dfact(2 * dj - 1) * eval(g, t);
  }
  BigQ half(1, 2);
  for (int r = 0; r <= k - 1; ++r) {
    int s = k - 1 - r;
    BigQ c = dfact(2 * r + 1) * dfact(2 * s + 1) * half;
    if (g >= 1) {
      std::vector<int> t = rest;
      t.push_back(r);
      t.push_back(s);
      total += c * eval(g - 1, t);
    }
    total += c * split_sum(g, r, s, rest, eval);
  }
  return total / dfact(2 * k + 3);
}

struct Memo {
  std::shared_mutex mu;
  std::map<std::pair<int, std::vector<int>>, BigQ> table;
};

Memo& memo() {
  static Memo m;
  return m;
}

BigQ compute(int g, std::vector<int> ks);

BigQ lookup(int g, std::vector<int> ks) {
  if (!stable(g, static_cast<int>(ks.size()))) return BigQ(0);
  if (!dimension_ok(g, ks)) return BigQ(0);
  std::sort(ks.begin(), ks.end(), std::greater<int>());
  auto key = std::make_pair(g, ks);
  {
    std::shared_lock lock(memo().mu);
    auto it = memo().table.find(key);
    if (it != memo().table.end()) return it->second;
  }
  BigQ v = compute(g, ks);
  std::unique_lock lock(memo().mu);
  memo().table.emplace(key, v);
  return v;
}

BigQ compute(int g, std::vector<int> ks) {
  const int n = static_cast<int>(ks.size());
  if (g == 0 && n == 3) return BigQ(1);
  if (g == 1 && n == 1) return BigQ(1, 24);
  // ks sorted descending
  if (ks.back() == 0) {
    ks.pop_back();
    BigQ s(0);
    for (std::size_t j = 0; j < ks.size(); ++j) {
      if (ks[j] == 0) continue;
      std::vector<int> t = ks;
      --t[j];
      s += lookup(g, t);
    }
    return s;
  }
  if (ks.back() == 1) {
    ks.pop_back();
    return BigQ(2 * g - 2 + n - 1) * lookup(g, ks);
  }
  int k = ks.front() - 1;
  std::vector<int> rest(ks.begin() + 1, ks.end());
  return dvv(g, k, rest, [](int gg, const std::vector<int>& t) { return lookup(gg, t); });
}

// own table, keyed on the unsorted insertion list so nothing is shared with the fast path
std::map<std::pair<int, std::vector<int>>, BigQ>& reference_table() {
  thread_local std::map<std::pair<int, std::vector<int>>, BigQ> t;
  return t;
}

BigQ reference_raw(int g, const std::vector<int>& ks);

BigQ reference(int g, const std::vector<int>& ks) {
  const int n = static_cast<int>(ks.size());
  if (!stable(g, n) || !dimension_ok(g, ks)) return BigQ(0);
  auto key = std::make_pair(g, ks);
  auto& t = reference_table();
  auto it = t.find(key);
  if (it != t.end()) return it->second;
  BigQ v = reference_raw(g, ks);
  t.emplace(key, v);
  return v;
}

BigQ reference_raw(int g, const std::vector<int>& ks) {
  const int n = static_cast<int>(ks.size());
  if (g == 0 && n == 3) return BigQ(1);
  if (g == 1 && n == 1) return BigQ(1, 24);
  std::size_t piv = 0;
  while (piv < ks.size() && ks[piv] == 0) ++piv;
  std::vector<int> rest;
  for (std::size_t i = 0; i < ks.size(); ++i)
    if (i != piv) rest.push_back(ks[i]);
  return dvv(g, ks[piv] - 1, rest, [](int gg, const std::vector<int>& t) { return reference(gg, t); });
}

}  // namespace

BigQ psi_intersection(int g, std::vector<int> ks) {
  if (g < 0 || ks.empty() || !stable(g, static_cast<int>(ks.size())))
    throw ValidationError("unstable (g, n) in psi intersection");
  return lookup(g, std::move(ks));
}

double psi_intersection_d(int g, const std::vector<int>& ks) { return big_to_double(psi_intersection(g, ks)); }

BigQ psi_intersection_reference(int g, const std::vector<int>& ks) {
  if (g < 0 || ks.empty() || !stable(g, static_cast<int>(ks.size())))
    throw ValidationError("unstable (g, n) in psi intersection");
  return reference(g, ks);
}

std::string to_string(const BigQ& q) {
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace ocgw
