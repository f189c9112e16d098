#include "ocgw/eo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ocgw/bmodel.hpp"
#include "ocgw/graphs.hpp"
#include "ocgw/special.hpp"

namespace ocgw {

bool curve_supported(const OrbifoldData& data) { return data.r() == 1; }

namespace {

constexpr int kWindowCap = 64;

cplx c_pow(cplx z, int k) {
  cplx r(1.0, 0.0);
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

// zeta^e with a given window
Laurent mono(cplx c, int e, int hi) { return Laurent::monomial(c, e, hi); }

std::string tstr(cplx t) {
  std::ostringstream os;
  os.precision(6);
  os << t.real() << (t.imag() < 0 ? "-" : "+") << std::abs(t.imag()) << "i";
  return os.str();
}

}  // namespace

SpectralCurve::SpectralCurve(const OrbifoldData& data, int window) : data_(data), window_(window) {
  if (!curve_supported(data))
    throw ValidationError("the curve engine needs r = 1; use the graph-sum pipeline (fgn --side b) instead");
  if (window < 8 || window > kWindowCap) throw WindowError("curve window must lie in [8, 64]");
  m_ = data.m();
  f_ = data.input().f;
  const int W = window_;
  const double mod = std::pow(double(f_) / (f_ + m_), 1.0 / m_);
  for (int a = 0; a < m_; ++a) tb_.push_back(data.character(a, data.eta2()) * mod * turn(Q(-1, 2 * m_)));

  const int N = W + 2;
  for (int a = 0; a < m_; ++a) {
    const cplx t = tb_[a];
    Laurent sv = mono(1.0, 1, N);
    Laurent T = Laurent::constant(t, N) + sv;
    Laurent l1 = (Laurent::constant(1.0, N) + sv * (1.0 / t)).log();
    const cplx P0 = c_pow(t, m_) + 1.0;
    Laurent l2 = ((T.pow(m_) + Laurent::constant(1.0, N)) * (1.0 / P0)).log();
    // x(t_a + s) - a_a
    Laurent A = l1 * cplx(-f_, 0.0) - l2;
    if (std::abs(A[1]) > 1e-9) throw std::logic_error("closed-form branch point is not a critical point at t = " + tstr(t));
    if (std::abs(A[2]) < 1e-12) throw ValidationError("non-simple branch point at t = " + tstr(t));
    A.ref(0) = 0.0;
    A.ref(1) = 0.0;
    Laurent A2 = A.shifted(-2).with_lo(0);
    cplx c1 = 1.0 / std::sqrt(A2[0]);
    // y = y_a + h_1 zeta + ..., h_1 = -c1 / t_a taken with positive real part
    if ((-c1 / t).real() < 0) c1 = -c1;
    Laurent root = (A2 * (c1 * c1)).sqrt();
    Laurent zeta = root.shifted(1) * (1.0 / c1);
    Laurent sz = zeta.reversion().with_lo(1).truncated(W);
    s_.push_back(sz);
    ds_.push_back(sz.derivative());
    h1_.push_back(-c1 / t);
  }
  for (int l = 0; l < m_; ++l) {
    const cplx tl = puncture(l);
    Laurent T = Laurent::constant(tl, W) + mono(1.0, 1, W);
    Laurent Xs = (T.pow(f_) * (T.pow(m_) + Laurent::constant(1.0, W))) * cplx(-1.0, 0.0);
    Xs.ref(0) = 0.0;
    sigma_.push_back(Xs.reversion());
  }
}

cplx SpectralCurve::X(cplx t) const { return -c_pow(t, f_) * (c_pow(t, m_) + 1.0); }

cplx SpectralCurve::puncture(int l) const { return turn(Q(2 * l + 1, 2 * m_)); }

Laurent SpectralCurve::leg(int a, int b, int k) const {
  std::array<int, 3> key{a, b, k};
  auto it = legs_.find(key);
  if (it != legs_.end()) return it->second;
  Laurent r;
  if (a == b) {
    r = ds_[a] * s_[a].inverse().pow(k);
  } else {
    Laurent base = Laurent::constant(tb_[a] - tb_[b], window_) + s_[a];
    r = ds_[a] * base.inverse().pow(k);
  }
  legs_[key] = r;
  return r;
}

Laurent SpectralCurve::at_branch(const Omega& one_leg, int a) const {
  Laurent r;
  bool first = true;
  for (const auto& [key, c] : one_leg) {
    Laurent x = leg(a, key[0], key[1]) * c;
    if (first) {
      r = x;
      first = false;
    } else {
      r += x;
    }
  }
  return r;
}

Laurent SpectralCurve::at_puncture(const Omega& one_leg, int l, int D) const {
  Laurent sig = sigma_[l].truncated(D);
  Laurent dsig = sig.derivative();
  Laurent r = Laurent::constant(0.0, D - 1);
  for (const auto& [key, c] : one_leg) {
    Laurent base = Laurent::constant(puncture(l) - tb_[key[0]], D) + sig;
    r += (dsig * base.inverse().pow(key[1])) * c;
  }
  return r.truncated(D - 1);
}

std::vector<cplx> branch_points_numeric(const OrbifoldData& data) {
  if (!curve_supported(data)) throw ValidationError("branch points are computed for r = 1 curves only");
  const int m = data.m(), f = data.input().f;
  // roots of t^m + f/(f+m)
  const cplx c0(double(f) / (f + m), 0.0);
  std::vector<cplx> z(m);
  for (int k = 0; k < m; ++k) z[k] = std::pow(cplx(0.4, 0.9), k);
  for (int it = 0; it < 500; ++it) {
    double move = 0.0;
    for (int k = 0; k < m; ++k) {
      cplx num = c_pow(z[k], m) + c0;
      cplx den(1.0, 0.0);
      for (int j = 0; j < m; ++j)
        if (j != k) den *= z[k] - z[j];
      cplx step = num / den;
      z[k] -= step;
      move = std::max(move, std::abs(step));
    }
    if (move < 1e-16) break;
  }
  // order as the closed-form labels
  SpectralCurve c(data, 8);
  std::vector<cplx> out(m);
  std::vector<bool> used(m, false);
  for (int a = 0; a < m; ++a) {
    int best = -1;
    for (int k = 0; k < m; ++k)
      if (!used[k] && (best < 0 || std::abs(z[k] - c.branch_t(a)) < std::abs(z[best] - c.branch_t(a)))) best = k;
    used[best] = true;
    out[a] = z[best];
  }
  return out;
}

Omega theta_form(const SpectralCurve& c, int a, int d) {
  if (d < 0) throw ValidationError("theta index must be >= 0");
  if (2 * d + 1 > c.window()) throw WindowError("theta_" + std::to_string(d) + " needs a larger window");
  Omega w;
  const double pre = -double_factorial_odd(d) / std::pow(2.0, d);
  Laurent sj = Laurent::constant(1.0, c.window());
  for (int j = 0; j <= 2 * d; ++j) {
    cplx v = (sj * c.ds(a))[2 * d];
    w[{a, j + 2}] = pre * double(j + 1) * v;
    sj = sj * c.s(a);
  }
  return w;
}

namespace {

// [zeta_1^K1 zeta_2^L1] of B(p_1, p_2) minus the diagonal pole, p_1 near p_a, p_2 near p_b
cplx bergman_coeff(const SpectralCurve& c, int a, int b, int K1, int L1) {
  Laurent sj = Laurent::constant(1.0, c.window());
  cplx r(0.0, 0.0);
  for (int j = 0; j <= L1; ++j) {
    cplx v = (sj * c.ds(b))[L1];
    if (v != cplx(0.0, 0.0)) r += double(j + 1) * v * c.leg(a, b, j + 2)[K1];
    sj = sj * c.s(b);
  }
  // the subtracted (zeta_1 - zeta_2)^{-2} only has negative powers of zeta_1
  return r;
}

}  // namespace

std::vector<cplx> b_check_curve(const SpectralCurve& c, int K) {
  const int G = c.order();
  std::vector<cplx> out(static_cast<std::size_t>(G) * G * (K + 1) * (K + 1));
  for (int a = 0; a < G; ++a)
    for (int b = 0; b < G; ++b)
      for (int k = 0; k <= K; ++k)
        for (int l = 0; l <= K; ++l) {
          double pre = double_factorial_odd(k) * double_factorial_odd(l) / std::pow(2.0, k + l + 1);
          out[((static_cast<std::size_t>(a) * G + b) * (K + 1) + k) * (K + 1) + l] =
              pre * bergman_coeff(c, a, b, 2 * k, 2 * l);
        }
  return out;
}

Omega pants(const SpectralCurve& c) {
  Omega w;
  for (int a = 0; a < c.order(); ++a) {
    auto t = theta_form(c, a, 0);
    for (const auto& [k1, v1] : t)
      for (const auto& [k2, v2] : t)
        for (const auto& [k3, v3] : t) {
          LegKey key{k1[0], k1[1], k2[0], k2[1], k3[0], k3[1]};
          w[key] += -v1 * v2 * v3 / (2.0 * c.h1_local(a));
        }
  }
  return w;
}

namespace {

using Expansion = std::map<LegKey, Laurent>;

void accumulate(Expansion& e, const LegKey& k, const Laurent& v) {
  auto it = e.find(k);
  if (it == e.end())
    e.emplace(k, v);
  else
    it->second += v;
}

class Recursion {
 public:
  Recursion(const SpectralCurve& c, double sign) : c_(c), sign_(sign) {}

  const Omega& omega(int g, int n) {
    auto key = std::make_pair(g, n);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Omega w = compute(g, n);
    return memo_.emplace(key, std::move(w)).first->second;
  }

 private:
  // first variable at p (bar = false) or at the involuted point (bar = true) of chart a
  Laurent factor(int a, int b, int k, bool bar) const {
    Laurent x = c_.leg(a, b, k);
    return bar ? -x.negated_var() : x;
  }

  Expansion expand_first(int g, int n, int a, bool bar) {
    Expansion e;
    if (g == 0 && n == 2) {
      // B(p, t_i) = sum_j (j+1) s^j ds dt_i / (t_i - t_a)^{j+2}
      Laurent sj = Laurent::constant(1.0, c_.window());
      for (int j = 0; j <= c_.window(); ++j) {
        Laurent v = sj * c_.ds(a) * double(j + 1);
        if (v.empty()) break;
        e.emplace(LegKey{a, j + 2}, bar ? -v.negated_var() : v);
        sj = sj * c_.s(a);
      }
      return e;
    }
    for (const auto& [key, v] : omega(g, n)) {
      LegKey rest(key.begin() + 2, key.end());
      accumulate(e, rest, factor(a, key[0], key[1], bar) * v);
    }
    return e;
  }

  const Laurent& kernel(int a, int j) {
    auto& ks = kernels_[a];
    if (ks.empty()) {
      const Laurent& s = c_.s(a);
      Laurent l = (Laurent::constant(1.0, c_.window()) + s * (1.0 / c_.branch_t(a))).log();
      Laurent dy = -(l - l.negated_var());  // y(zeta) - y(-zeta)
      inv_[a] = (dy.shifted(1) * 4.0).inverse();
      ks.push_back(Laurent());
    }
    while (static_cast<int>(ks.size()) <= j) {
      int jj = static_cast<int>(ks.size());
      const Laurent& s = c_.s(a);
      Laurent num = s.negated_var().pow(jj) - s.pow(jj);
      ks.push_back(num * inv_[a]);
    }
    return ks[j];
  }

  Omega compute(int g, int n) {
    if (2 * g - 2 + n <= 0) throw ValidationError("omega_{g,n} by recursion needs 2g-2+n > 0");
    const int G = c_.order();
    const int J = n - 1;
    Omega out;
    for (int a = 0; a < G; ++a) {
      Expansion bracket;
      if (g >= 1) {
        if (g == 1 && n == 1) {
          const Laurent& s = c_.s(a);
          Laurent diff = s - s.negated_var();
          Laurent w02 = -(c_.ds(a) * c_.ds(a).negated_var()) * (diff * diff).inverse();
          accumulate(bracket, LegKey{}, w02);
        } else {
          for (const auto& [key, v] : omega(g - 1, n + 1)) {
            LegKey rest(key.begin() + 4, key.end());
            accumulate(bracket, rest, factor(a, key[0], key[1], false) * factor(a, key[2], key[3], true) * v);
          }
        }
      }
      for (int g1 = 0; g1 <= g; ++g1)
        for (int mask = 0; mask < (1 << J); ++mask) {
          const int n1 = __builtin_popcount(mask), n2 = J - n1;
          const int g2 = g - g1;
          if ((g1 == 0 && n1 == 0) || (g2 == 0 && n2 == 0)) continue;
          Expansion e1 = expand_first(g1, n1 + 1, a, false);
          Expansion e2 = expand_first(g2, n2 + 1, a, true);
          for (const auto& [k1, v1] : e1)
            for (const auto& [k2, v2] : e2) {
              LegKey rest;
              int i1 = 0, i2 = 0;
              for (int pos = 0; pos < J; ++pos) {
                if (mask >> pos & 1) {
                  rest.push_back(k1[2 * i1]);
                  rest.push_back(k1[2 * i1 + 1]);
                  ++i1;
                } else {
                  rest.push_back(k2[2 * i2]);
                  rest.push_back(k2[2 * i2 + 1]);
                  ++i2;
                }
              }
              accumulate(bracket, rest, v1 * v2);
            }
        }
      for (const auto& [rest, br] : bracket) {
        // K_j has valuation >= j - 2
        for (int j = 1; j - 2 + br.lo() <= -1; ++j) {
          const Laurent& kj = kernel(a, j);
          Laurent prod = kj * br;
          if (prod.lo() > -1) continue;
          cplx r = prod[-1];
          if (r == cplx(0.0, 0.0)) continue;
          LegKey key{a, j + 1};
          key.insert(key.end(), rest.begin(), rest.end());
          out[key] += sign_ * r;
        }
      }
    }
    return out;
  }

  const SpectralCurve& c_;
  double sign_;
  std::map<std::pair<int, int>, Omega> memo_;
  std::map<int, std::vector<Laurent>> kernels_;
  std::map<int, Laurent> inv_;
};

double largest_ratio(const Omega& a, const Omega& b) {
  LegKey best;
  double mx = -1.0;
  for (const auto& [k, v] : b)
    if (std::abs(v) > mx) {
      mx = std::abs(v);
      best = k;
    }
  auto it = a.find(best);
  if (mx <= 0.0 || it == a.end()) return 0.0;
  return (it->second / b.at(best)).real();
}

}  // namespace

Omega omega_gn(const OrbifoldData& data, int g, int n, RecursionInfo* info, int window) {
  if (g < 0 || n < 1 || 2 * g - 2 + n <= 0) throw ValidationError("omega_{g,n} needs 2g-2+n > 0");
  int W = std::max(8, std::min(window, kWindowCap));
  while (true) {
    try {
      SpectralCurve c(data, W);
      // orientation of the kernel fixed against the pair of pants
      Recursion probe(c, 1.0);
      Omega w03 = probe.omega(0, 3);
      double cal = largest_ratio(w03, pants(c));
      double sign = cal < 0 ? -1.0 : 1.0;
      Recursion rec(c, sign);
      Omega w = rec.omega(g, n);
      if (info) {
        info->window = W;
        info->kernel_sign = sign;
        info->calibration = cal;
      }
      return w;
    } catch (const WindowError& e) {
      if (W >= kWindowCap)
        throw WindowError(std::string("series window exhausted at order ") + std::to_string(W) + ": " + e.what());
      W = std::min(2 * W, kWindowCap);
    }
  }
}

Omega doss_sum(const SpectralCurve& c, int g, int n) {
  const int G = c.order();
  auto graphs = enumerate_graphs(g, n, 0);
  int K = 0;
  for (const auto& gr : graphs) K = std::max(K, gr.max_height());
  const int per = 2 * K + 1;  // pole orders 2 .. 2K+2
  WeightTables t;
  t.order = G;
  t.p = 0;
  t.leg_size = G * per;
  t.K = K;
  const cplx s2 = sqrt_m2();
  t.vertex_base = s2 / c.h1_local(0);
  t.edge = b_check_curve(c, K);
  auto hc = h_check_series(c.data(), 0, K);
  t.dilaton.assign(static_cast<std::size_t>(G) * (K + 1), cplx(0.0, 0.0));
  for (int a = 0; a < G; ++a)
    for (int k = 1; k <= K; ++k) t.dilaton[a * (K + 1) + k] = -hc[k - 1] / s2;
  t.primary.assign(static_cast<std::size_t>(G) * (K + 1), cplx(0.0, 0.0));
  t.open.assign(static_cast<std::size_t>(G) * (K + 1) * t.leg_size, cplx(0.0, 0.0));
  for (int a = 0; a < G; ++a)
    for (int k = 0; k <= K; ++k)
      for (const auto& [key, v] : theta_form(c, a, k))
        t.open[(a * (K + 1) + k) * t.leg_size + key[0] * per + key[1] - 2] = -v / s2;
  const cplx global = (g % 2 == 1) ? 1.0 : -1.0;
  std::vector<cplx> out;
  for (const auto& gr : graphs) {
    const int V = gr.core.vertices();
    std::vector<int> alpha(V, 0);
    while (true) {
      add_graph_weight(gr, alpha, t, global, out);
      int v = V - 1;
      while (v >= 0 && ++alpha[v] == G) alpha[v--] = 0;
      if (v < 0) break;
    }
  }
  Omega w;
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    if (out[idx] == cplx(0.0, 0.0)) continue;
    LegKey key(2 * n);
    std::size_t rem = idx;
    for (int j = n - 1; j >= 0; --j) {
      int leg = static_cast<int>(rem % t.leg_size);
      rem /= t.leg_size;
      key[2 * j] = leg / per;
      key[2 * j + 1] = leg % per + 2;
    }
    w[key] = out[idx];
  }
  return w;
}

double omega_deviation(const Omega& a, const Omega& b) {
  double scale = 0.0;
  for (const auto& [k, v] : a) scale = std::max(scale, std::abs(v));
  for (const auto& [k, v] : b) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;
  double dev = 0.0;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    dev = std::max(dev, std::abs(v - (it == b.end() ? cplx(0.0, 0.0) : it->second)));
  }
  for (const auto& [k, v] : b)
    if (!a.count(k)) dev = std::max(dev, std::abs(v));
  return dev / scale;
}

double omega_symmetry_defect(const Omega& w, int n) {
  double scale = 0.0;
  for (const auto& [k, v] : w) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;
  double dev = 0.0;
  for (const auto& [k, v] : w)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        LegKey p = k;
        std::swap(p[2 * i], p[2 * j]);
        std::swap(p[2 * i + 1], p[2 * j + 1]);
        auto it = w.find(p);
        cplx o = it == w.end() ? cplx(0.0, 0.0) : it->second;
        dev = std::max(dev, std::abs(v - o));
      }
  return dev / scale;
}

namespace {

// dense power series in two variables, exponents 0..D each
struct Bi {
  int D = 0;
  std::vector<cplx> c;
  explicit Bi(int d) : D(d), c(static_cast<std::size_t>(d + 1) * (d + 1)) {}
  cplx& at(int i, int j) { return c[i * (D + 1) + j]; }
  cplx at(int i, int j) const { return c[i * (D + 1) + j]; }
  Bi operator*(const Bi& o) const {
    Bi r(D);
    for (int i = 0; i <= D; ++i)
      for (int j = 0; j <= D; ++j) {
        cplx x = at(i, j);
        if (x == cplx(0.0, 0.0)) continue;
        for (int k = 0; i + k <= D; ++k)
          for (int l = 0; j + l <= D; ++l) r.at(i + k, j + l) += x * o.at(k, l);
      }
    return r;
  }
};

// log(1 + u) with u(0,0) = 0
Bi log1p(const Bi& u) {
  Bi r(u.D), p = u;
  for (int k = 1; k <= 2 * u.D; ++k) {
    double s = (k % 2 ? 1.0 : -1.0) / k;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += s * p.c[i];
    p = p * u;
  }
  return r;
}

}  // namespace

PotentialSeries expand_potential(const SpectralCurve& c, const Omega& w, int g, int n, int D) {
  if (D < 1) throw ValidationError("winding window must be >= 1");
  if (2 * D + 2 > c.window()) throw WindowError("puncture chart window too small for winding " + std::to_string(D));
  const int m = c.m();
  PotentialSeries F(g, n, c.data().p(), m, D, 0, Basis::Psi);
  if (g == 0 && n == 1) {
    for (int l = 0; l < m; ++l) {
      Laurent sig = c.sigma(l).truncated(D);
      Laurent lg = (Laurent::constant(1.0, D) + sig * (1.0 / c.puncture(l))).log();
      for (int d = 1; d <= D; ++d) F.data[l * D + d - 1] = lg[d] / double(d);
    }
    return F;
  }
  if (g == 0 && n == 2) {
    const int ls = m * D;
    for (int l1 = 0; l1 < m; ++l1)
      for (int l2 = 0; l2 < m; ++l2) {
        Bi u(D);
        if (l1 == l2) {
          // (t1 - t2) / (X1 - X2) = sum_k sigma_k sum_{a+b=k-1} X1^a X2^b
          const Laurent& sig = c.sigma(l1);
          const cplx s1 = sig[1];
          for (int a = 0; a <= D; ++a)
            for (int b = 0; b <= D; ++b)
              if (a + b > 0) u.at(a, b) = sig[a + b + 1] / s1;
        } else {
          const cplx d0 = c.puncture(l1) - c.puncture(l2);
          for (int a = 1; a <= D; ++a) {
            u.at(a, 0) = c.sigma(l1)[a] / d0;
            u.at(0, a) = -c.sigma(l2)[a] / d0;
          }
        }
        Bi G = log1p(u);
        for (int d1 = 1; d1 <= D; ++d1)
          for (int d2 = 1; d2 <= D; ++d2) F.data[(l1 * D + d1 - 1) * ls + l2 * D + d2 - 1] = G.at(d1, d2);
      }
    return F;
  }
  // integral from the puncture of dt/(t - t_b)^q
  std::map<std::array<int, 3>, std::vector<cplx>> prim;
  auto primitive = [&](int l, int b, int q) -> const std::vector<cplx>& {
    std::array<int, 3> key{l, b, q};
    auto it = prim.find(key);
    if (it != prim.end()) return it->second;
    const cplx z = c.puncture(l) - c.branch_t(b);
    Laurent base = Laurent::constant(z, D) + c.sigma(l).truncated(D);
    Laurent p = base.inverse().pow(q - 1);
    std::vector<cplx> v(D);
    for (int d = 1; d <= D; ++d) v[d - 1] = p[d] / double(1 - q);
    return prim.emplace(key, v).first->second;
  };
  const int ls = m * D;
  for (const auto& [key, coef] : w) {
    std::vector<std::vector<cplx>> legs(n, std::vector<cplx>(ls));
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < m; ++l) {
        const auto& v = primitive(l, key[2 * j], key[2 * j + 1]);
        std::copy(v.begin(), v.end(), legs[j].begin() + l * D);
      }
    std::vector<cplx> tensor{coef};
    for (int j = 0; j < n; ++j) {
      std::vector<cplx> next(tensor.size() * ls);
      for (std::size_t i = 0; i < tensor.size(); ++i)
        for (int x = 0; x < ls; ++x) next[i * ls + x] = tensor[i] * legs[j][x];
      tensor = std::move(next);
    }
    for (std::size_t i = 0; i < tensor.size(); ++i) F.data[i] += tensor[i];
  }
  return F;
}

PotentialSeries eo_potential(const OrbifoldData& data, int g, int n, int D) {
  const int window = std::max(24, 2 * D + 2);
  RecursionInfo info;
  info.window = window;
  Omega w;
  if (2 * g - 2 + n > 0) w = omega_gn(data, g, n, &info, window);
  SpectralCurve c(data, info.window);
  auto F = expand_potential(c, w, g, n, D);
  F.meta["source"] = "curve";
  F.meta["window"] = info.window;
  if (2 * g - 2 + n > 0) F.meta["kernel_sign"] = info.kernel_sign;
  return F;
}

CheckReport pants_check(const OrbifoldData& data) {
  CheckReport r;
  r.name = "pants";
  r.tol = 1e-10;
  RecursionInfo info;
  Omega w = omega_gn(data, 0, 3, &info);
  SpectralCurve c(data, info.window);
  r.deviation = omega_deviation(w, pants(c));
  r.ok = r.deviation <= r.tol;
  r.detail["calibration"] = info.calibration;
  r.detail["kernel_sign"] = info.kernel_sign;
  r.detail["window"] = info.window;
  return r;
}

CheckReport doss_check(const OrbifoldData& data, int g, int n) {
  CheckReport r;
  r.name = "doss(" + std::to_string(g) + "," + std::to_string(n) + ")";
  r.tol = 1e-9;
  RecursionInfo info;
  Omega w = omega_gn(data, g, n, &info);
  SpectralCurve c(data, info.window);
  Omega d = doss_sum(c, g, n);
  r.deviation = omega_deviation(w, d);
  double sym = omega_symmetry_defect(w, n);
  r.ok = r.deviation <= r.tol && sym <= 1e-10;
  r.detail["symmetry"] = sym;
  r.detail["terms"] = w.size();
  r.detail["window"] = info.window;
  return r;
}

CheckReport c_kernel_check(const SpectralCurve& c) {
  CheckReport r;
  r.name = "c-kernel";
  r.tol = 1e-10;
  const int m = c.m(), f = c.f();
  auto xp = [&](cplx t) { return -(double(f) / t + double(m) * c_pow(t, m - 1) / (c_pow(t, m) + 1.0)); };
  auto xpp = [&](cplx t) {
    cplx P = c_pow(t, m) + 1.0;
    cplx dP = double(m) * c_pow(t, m - 1);
    cplx ddP = m >= 2 ? double(m) * (m - 1) * c_pow(t, m - 2) : cplx(0.0, 0.0);
    return double(f) / (t * t) - (ddP * P - dP * dP) / (P * P);
  };
  std::vector<cplx> th(m);
  for (int a = 0; a < m; ++a) th[a] = theta_form(c, a, 0).at({a, 2});
  std::vector<cplx> pts;
  for (int l = 0; l < m; ++l) pts.push_back(c.puncture(l) + 0.1 * turn(Q(l + 1, 7)));
  for (int a = 0; a < m; ++a) pts.push_back(c.branch_t(a) + 0.08 * turn(Q(2 * a + 1, 9)));
  pts.push_back({0.7, 0.4});
  pts.push_back({-1.3, 0.6});
  double dev = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      cplx t1 = pts[i], t2 = pts[j];
      cplx x1 = xp(t1), x2 = xp(t2);
      cplx F = 1.0 / ((t1 - t2) * (t1 - t2) * x1 * x2);
      cplx d1 = F * (-2.0 / (t1 - t2) - xpp(t1) / x1);
      cplx d2 = F * (2.0 / (t1 - t2) - xpp(t2) / x2);
      cplx lhs = -x2 * d1 - x1 * d2;
      cplx rhs(0.0, 0.0);
      for (int a = 0; a < m; ++a)
        rhs += 0.5 * th[a] * th[a] / ((t1 - c.branch_t(a)) * (t1 - c.branch_t(a)) * (t2 - c.branch_t(a)) *
                                      (t2 - c.branch_t(a)));
      dev = std::max(dev, std::abs(lhs - rhs));
      scale = std::max(scale, std::abs(rhs));
    }
  r.deviation = scale > 0 ? dev / scale : dev;
  r.ok = r.deviation <= r.tol;
  r.detail["pairs"] = pts.size() * (pts.size() - 1);
  return r;
}

CheckReport xi_recursion_check(const SpectralCurve& c, int kmax) {
  CheckReport r;
  r.name = "xi-recursion";
  r.tol = 1e-10;
  const int G = c.order();
  auto Bc = b_check_curve(c, kmax);
  auto B = [&](int a, int b, int k) {
    return Bc[((static_cast<std::size_t>(a) * G + b) * (kmax + 1) + k) * (kmax + 1)];
  };
  double dev = 0.0, scale = 0.0;
  for (int a = 0; a < G; ++a)
    for (int k = 0; k <= kmax; ++k) {
      Omega tk = theta_form(c, a, k), tk1 = theta_form(c, a, k + 1);
      for (int b = 0; b < G; ++b) {
        Laurent lhs = c.at_branch(tk1, b);
        Laurent q = c.at_branch(tk, b).shifted(-1) * 0.5;
        lhs += q.derivative();
        for (int gm = 0; gm < G; ++gm) lhs += c.at_branch(theta_form(c, gm, 0), b) * B(a, gm, k);
        const int top = std::min(lhs.hi(), 6);
        for (int e = lhs.lo(); e <= top; ++e) dev = std::max(dev, std::abs(lhs[e]));
        Laurent ref = c.at_branch(tk1, b);
        for (int e = ref.lo(); e <= std::min(ref.hi(), 6); ++e) scale = std::max(scale, std::abs(ref[e]));
      }
    }
  r.deviation = scale > 0 ? dev / scale : dev;
  r.ok = r.deviation <= r.tol;
  return r;
}

CheckReport xihxi_check(const SpectralCurve& c, int kmax, int D) {
  CheckReport r;
  r.name = "xihxi";
  r.tol = 1e-10;
  const int G = c.order();
  auto Bc = b_check_curve(c, kmax);
  auto B = [&](int a, int b, int k) {
    return Bc[((static_cast<std::size_t>(a) * G + b) * (kmax + 1) + k) * (kmax + 1)];
  };
  double dev = 0.0, scale = 0.0;
  for (int l = 0; l < c.m(); ++l) {
    // dxi-hat_{a,i} / dX for every a and i <= kmax
    std::vector<std::vector<Laurent>> dh(G);
    std::vector<std::vector<Laurent>> th(G);
    for (int a = 0; a < G; ++a) {
      Laurent t0 = c.at_puncture(theta_form(c, a, 0), l, D + 1);
      dh[a].push_back(t0);
      Laurent h = t0.shifted(1);  // X theta_0 / dX
      for (int i = 1; i <= kmax; ++i) {
        dh[a].push_back(h.derivative());
        h = euler(h);
      }
      for (int k = 0; k <= kmax; ++k) th[a].push_back(c.at_puncture(theta_form(c, a, k), l, D + 1));
    }
    for (int a = 0; a < G; ++a)
      for (int k = 0; k <= kmax; ++k) {
        Laurent rhs = dh[a][k];
        for (int i = 0; i < k; ++i)
          for (int b = 0; b < G; ++b) rhs += dh[b][i] * (-B(a, b, k - 1 - i));
        for (int e = 0; e <= D - 1; ++e) {
          dev = std::max(dev, std::abs(th[a][k][e] - rhs[e]));
          scale = std::max(scale, std::abs(th[a][k][e]));
        }
      }
  }
  r.deviation = scale > 0 ? dev / scale : dev;
  r.ok = r.deviation <= r.tol;
  return r;
}

CheckReport theta_check(const SpectralCurve& c, int dmax, int D) {
  CheckReport r;
  r.name = "theta";
  r.tol = 1e-10;
  const int G = c.order();
  double lead = 0.0, res = 0.0;
  for (int a = 0; a < G; ++a)
    for (int d = 0; d <= dmax; ++d) {
      Laurent t = c.at_branch(theta_form(c, a, d), a);
      const double want = -double_factorial_odd(d + 1) / std::pow(2.0, d);
      lead = std::max(lead, std::abs(t[-2 * d - 2] - want) / std::abs(want));
      for (int e = t.lo(); e < -2 * d - 2; ++e) lead = std::max(lead, std::abs(t[e]));
      res = std::max(res, std::abs(t[-1]));
    }
  double xdev = 0.0, xscale = 0.0;
  for (int b = 0; b < G; ++b)
    for (int l = 0; l < c.m(); ++l) {
      Laurent t = c.at_puncture(theta_form(c, b, 0), l, D);
      auto x = xi_expansion(c.data(), b, l, D);
      for (int d = 1; d <= D; ++d) {
        cplx integral = t[d - 1] / double(d);
        xdev = std::max(xdev, std::abs(integral - x[d - 1]));
        xscale = std::max(xscale, std::abs(x[d - 1]));
      }
    }
  double xrel = xscale > 0 ? xdev / xscale : xdev;
  r.deviation = std::max({lead, res, xrel});
  r.ok = r.deviation <= r.tol;
  r.detail["leading"] = lead;
  r.detail["residue"] = res;
  r.detail["xi_expansion"] = xrel;
  return r;
}

CheckReport b_check_consistency(const SpectralCurve& c, int K) {
  CheckReport r;
  r.name = "b-check";
  r.tol = 1e-9;
  auto a = b_check_curve(c, K);
  auto b = b_check_table(c.data(), K);
  double dev = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dev = std::max(dev, std::abs(a[i] - b[i]));
    scale = std::max(scale, std::abs(b[i]));
  }
  r.deviation = scale > 0 ? dev / scale : dev;
  r.ok = r.deviation <= r.tol;
  return r;
}

}  // namespace ocgw
