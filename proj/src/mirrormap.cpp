#include "ocgw/mirrormap.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "ocgw/special.hpp"

namespace ocgw {

namespace {

std::array<Q, 3> cvec(const OrbifoldData& data, int b) { return data.element(data.age1()[b].index).c; }

bool integral(const OrbifoldData& data, const std::vector<int>& d) {
  for (int i = 0; i < 3; ++i) {
    Q s(0);
    for (std::size_t b = 0; b < d.size(); ++b) s += Q(d[b]) * cvec(data, static_cast<int>(b))[i];
    if (s.denominator() != 1) return false;
  }
  return true;
}

void walk(int p, int max_sum, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> d(p, 0);
  std::function<void(int, int)> rec = [&](int b, int left) {
    if (b == p) {
      fn(d);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      d[b] = k;
      rec(b + 1, left - k);
    }
    d[b] = 0;
  };
  rec(0, max_sum);
}

HP hq(const Q& q) { return HP(q.numerator()) / HP(q.denominator()); }

TruncatedSeries shape(int p, int degree) {
  std::vector<std::string> vars;
  for (int a = 1; a <= p; ++a) vars.push_back("q" + std::to_string(a));
  return TruncatedSeries(vars, std::vector<int>(p, 0), std::vector<int>(p, degree), degree);
}

}  // namespace

std::vector<std::vector<int>> mirror_degrees_brute(const OrbifoldData& data, int max_sum) {
  std::vector<std::vector<int>> out;
  walk(data.p(), max_sum, [&](const std::vector<int>& d) {
    if (integral(data, d)) out.push_back(d);
  });
  return out;
}

std::vector<std::vector<int>> mirror_degrees(const OrbifoldData& data, int max_sum) {
  const int p = data.p();
  const int G = data.order();
  // the constraint only sees d mod |G|
  std::vector<std::vector<int>> residues;
  walk(p, p * (G - 1), [&](const std::vector<int>& d) {
    if (std::all_of(d.begin(), d.end(), [&](int x) { return x < G; }) && integral(data, d)) residues.push_back(d);
  });
  std::vector<std::vector<int>> out;
  for (const auto& r : residues) {
    int base = 0;
    for (int x : r) base += x;
    if (base > max_sum) continue;
    // add multiples of |G| in each slot
    walk(p, (max_sum - base) / G, [&](const std::vector<int>& k) {
      std::vector<int> d = r;
      int tot = base;
      for (int b = 0; b < p; ++b) {
        d[b] += G * k[b];
        tot += G * k[b];
      }
      if (tot <= max_sum) out.push_back(d);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

double mirror_coefficient(const OrbifoldData& data, int a, const std::vector<int>& d) {
  const auto ca = cvec(data, a);
  HP v = 1;
  for (int i = 0; i < 3; ++i) {
    Q s(0);
    for (std::size_t b = 0; b < d.size(); ++b) s += Q(d[b]) * cvec(data, static_cast<int>(b))[i];
    Q den = Q(1) - ca[i] - s;
    if (den.denominator() == 1 && den.numerator() <= 0) return 0.0;
    v *= boost::math::tgamma(hq(Q(1) - frac(ca[i]))) / boost::math::tgamma(hq(den));
  }
  for (int x : d) v /= boost::math::factorial<HP>(x);
  return v.convert_to<double>();
}

MirrorMapSeries mirror_map_series(const OrbifoldData& data, int degree) {
  if (degree < 1) throw ValidationError("mirror map degree must be >= 1");
  MirrorMapSeries s;
  s.p = data.p();
  s.degree = degree;
  if (s.p == 0) return s;
  const int p = s.p;
  TruncatedSeries sh = shape(p, degree);
  auto degs = mirror_degrees(data, degree - 1);
  for (int a = 0; a < p; ++a) {
    TruncatedSeries t = sh;
    for (const auto& d : degs) {
      double c = mirror_coefficient(data, a, d);
      if (c == 0.0) continue;
      std::vector<int> e = d;
      e[a] += 1;
      t.add_to(e, c);
    }
    s.tau.push_back(t);
  }
  // q = tau - (tau(q) - q), iterated; each pass fixes one more degree
  std::vector<TruncatedSeries> q;
  for (int a = 0; a < p; ++a) q.push_back(TruncatedSeries::variable(sh, a));
  const std::vector<TruncatedSeries> id = q;
  for (int it = 1; it < degree; ++it) {
    std::vector<TruncatedSeries> next;
    for (int a = 0; a < p; ++a) next.push_back(id[a] - (s.tau[a].compose(q) - q[a]));
    q = std::move(next);
  }
  s.inverse = q;
  return s;
}

double mirror_round_trip(const MirrorMapSeries& s) {
  double dev = 0.0;
  for (int a = 0; a < s.p; ++a) {
    TruncatedSeries back = s.tau[a].compose(s.inverse);
    dev = std::max(dev, back.max_abs_diff(TruncatedSeries::variable(back, a)));
  }
  return dev;
}

}  // namespace ocgw
