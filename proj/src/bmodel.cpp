#include "ocgw/bmodel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ocgw/eo.hpp"
#include "ocgw/special.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace ocgw {

namespace {

// exp(sum_m (-1)^{m+1}/(m(m+1)) sum_i B_{m+1}(c_i(h)) (w_i u)^{-m}) in powers of 1/u, exact
std::vector<BigQ> laplace_series(const OrbifoldData& data, int h, int K) {
  const auto& c = data.element(h).c;
  std::vector<BigQ> a(K + 1, BigQ(0));
  for (int m = 1; m <= K; ++m) {
    BigQ s(0);
    for (int i = 0; i < 3; ++i) {
      BigQ wm(1), w = to_big(data.w()[i]);
      for (int j = 0; j < m; ++j) wm *= w;
      s += bernoulli_poly(m + 1, c[i]) / wm;
    }
    a[m] = (m % 2 ? BigQ(1) : BigQ(-1)) * s / BigQ(m * (m + 1));
  }
  return exp_series_q(a);
}

HP hpq(const Q& q) { return HP(q.numerator()) / HP(q.denominator()); }

// e^{i pi x} for rational x
cplx half_turn(const Q& x) { return turn(x / Q(2)); }

// e^{2 pi i y} for real y, reduced first
cplx turn_real(long double y) {
  long double f = y - std::floor(y);
  long double a = 2.0L * std::numbers::pi_v<long double> * f;
  return {static_cast<double>(std::cos(a)), static_cast<double>(std::sin(a))};
}

// log Gamma(uw1+c1) + log Gamma(uw2+c2) - log Gamma(-uw3+1-c3) with sign
HP log_gamma_ratio(const OrbifoldData& data, const HP& u, const std::array<Q, 3>& c, int* sign) {
  const auto& w = data.w();
  HP a = u * hpq(w[0]) + hpq(c[0]);
  HP b = u * hpq(w[1]) + hpq(c[1]);
  HP d = -u * hpq(w[2]) + 1 - hpq(c[2]);
  auto pole = [](const HP& x) { return x <= 0 && x == boost::multiprecision::floor(x); };
  if (pole(a) || pole(b)) throw ValidationError("Gamma pole on the u grid");
  int sa = 1, sb = 1, sd = 1;
  HP la = boost::math::lgamma(a, &sa);
  HP lb = boost::math::lgamma(b, &sb);
  if (pole(d)) {
    *sign = 0;
    return HP(0);
  }
  HP ld = boost::math::lgamma(d, &sd);
  *sign = sa * sb * sd;
  return la + lb - ld;
}

}  // namespace

SeriesMatrix f_matrix(const OrbifoldData& data, int K) {
  if (K < 0) throw ValidationError("series order must be >= 0");
  const int G = data.order();
  SeriesMatrix F(G, K);
  std::vector<std::vector<double>> e(G);
  for (int h = 0; h < G; ++h) {
    auto s = laplace_series(data, h, K);
    for (int k = 0; k <= K; ++k) e[h].push_back(big_to_double(s[k]));
  }
  for (int a = 0; a < G; ++a)
    for (int b = 0; b < G; ++b)
      for (int h = 0; h < G; ++h) {
        cplx ch = turn(data.char_turn(a, h) + data.char_turn(b, data.inv(h))) / double(G);
        for (int k = 0; k <= K; ++k) F.ref(a, b, k) += ch * e[h][k];
      }
  return F;
}

double h1_zero(const OrbifoldData& data) { return std::sqrt(2.0 / data.abs_w123()) / data.order(); }

std::vector<cplx> h_check_series(const OrbifoldData& data, int alpha, int K) {
  if (alpha < 0 || alpha >= data.order()) throw ValidationError("character index out of range");
  // c_i = 0, so B_{m+1}(0) = B_{m+1}
  std::vector<BigQ> a(K + 1, BigQ(0));
  for (int m = 1; m <= K; ++m) {
    BigQ s(0);
    for (int i = 0; i < 3; ++i) {
      BigQ wm = 1;
      for (int j = 0; j < m; ++j) wm *= to_big(data.w()[i]);
      s += BigQ(1) / wm;
    }
    a[m] = (m % 2 ? BigQ(1) : BigQ(-1)) * bernoulli_number(m + 1) * s / BigQ(m * (m + 1));
  }
  auto e = exp_series_q(a);
  std::vector<cplx> out(K + 1);
  const double h1 = h1_zero(data);
  for (int k = 0; k <= K; ++k) out[k] = h1 * big_to_double(e[k]);
  return out;
}

std::vector<cplx> h_check_from_f(const OrbifoldData& data, int alpha, int K) {
  auto F = f_matrix(data, K);
  std::vector<cplx> out(K + 1);
  const double h1 = h1_zero(data);
  for (int k = 0; k <= K; ++k)
    for (int b = 0; b < data.order(); ++b) out[k] += F(alpha, b, k) * h1;
  return out;
}

std::vector<cplx> b_check_table(const OrbifoldData& data, int K, double* remainder) {
  auto F = f_matrix(data, 2 * K + 1);
  // S(g, a, k) = [u^-k] f^a_g
  SeriesMatrix S(F.order, F.K);
  for (int g = 0; g < F.order; ++g)
    for (int a = 0; a < F.order; ++a)
      for (int k = 0; k <= F.K; ++k) S.ref(g, a, k) = F(a, g, k);
  return edge_quotient(S, K, remainder);
}

cplx b_check(const OrbifoldData& data, int alpha, int beta, int k, int l) {
  if (k < 0 || l < 0) throw ValidationError("indices must be >= 0");
  const int K = std::max(k, l);
  auto t = b_check_table(data, K);
  const int G = data.order();
  return t[((static_cast<std::size_t>(alpha) * G + beta) * (K + 1) + k) * (K + 1) + l];
}

std::vector<cplx> xi_expansion(const OrbifoldData& data, int beta, int l, int D) {
  if (D < 1) throw ValidationError("winding window must be >= 1");
  const int m = data.m();
  if (l < 0 || l >= m) throw ValidationError("puncture label out of range");
  const auto& w = data.w();
  std::vector<cplx> out(D);
  for (int d = 1; d <= D; ++d) {
    cplx s(0.0, 0.0);
    for (int k = 0; k < m; ++k) {
      const int h = data.winding_element(d, k);
      const auto& e = data.element(h);
      const auto& c = e.c;
      cplx ph = half_turn(-(Q(d) * w[2] - c[2]));
      cplx ch = data.character(beta, data.inv(h));
      cplx wp = data.w_power(std::array<Q, 3>{Q(1, 2) - c[0], Q(1, 2) - c[1], Q(1, 2) - c[2]});
      double g = gamma_ratio(Q(d) * (w[0] + w[1]) + c[2], Q(d) * w[0] - c[0] + 1, Q(d) * w[1] - c[1] + 1);
      double pw = std::pow(double(d), 1 - e.age);
      cplx lab = turn(Q(-static_cast<long long>(k) * (l + 1), m));
      s += ph * ch / double(m) * pw * wp * g * lab;
    }
    out[d - 1] = sqrt_m2() * s;
  }
  return out;
}

std::vector<cplx> xi_expansion_psi(const OrbifoldData& data, int beta, int D) {
  const int m = data.m();
  std::vector<cplx> v(static_cast<std::size_t>(m) * D);
  for (int l = 0; l < m; ++l) {
    auto x = xi_expansion(data, beta, l, D);
    std::copy(x.begin(), x.end(), v.begin() + l * D);
  }
  return v;
}

cplx critical_X(const OrbifoldData& data, int alpha) {
  const double G = data.order();
  double mod = 1.0;
  for (int i = 0; i < 3; ++i) mod *= std::pow(std::abs(G * data.wd(i)), data.wd(i));
  return data.character(alpha, data.eta1()) * mod * half_turn(data.w()[2]);
}

cplx critical_Y(const OrbifoldData& data, int alpha) {
  const int m = data.m();
  double mod = std::pow(std::abs(data.wd(1) / data.wd(2)), 1.0 / m);
  return data.character(alpha, data.eta2()) * mod * half_turn(Q(-1, m));
}

cplx oscillatory_phi(const OrbifoldData& data, int alpha, double u, int Qdeg, const std::vector<cplx>& q) {
  const int p = data.p();
  if (static_cast<int>(q.size()) != p) throw ValidationError("need one q value per age-1 element");
  if (Qdeg < 0) throw ValidationError("q-degree must be >= 0");
  const HP uh(u);
  cplx total(0.0, 0.0);
  for (const auto& r : tau_monomials(p, Qdeg)) {
    std::array<Q, 3> c{Q(0), Q(0), Q(0)};
    Q chi(0);
    cplx qf(1.0, 0.0);
    for (int a = 0; a < p; ++a) {
      const int h = data.age1()[a].index;
      for (int i = 0; i < 3; ++i) c[i] += Q(r[a]) * data.element(h).c[i];
      chi += Q(r[a]) * data.char_turn(alpha, h);
      qf *= std::pow(-q[a], r[a]) / factorial(r[a]);
    }
    if (qf == cplx(0.0, 0.0)) continue;
    int sg = 0;
    HP lg = log_gamma_ratio(data, uh, c, &sg);
    if (sg == 0) continue;
    double mag = static_cast<double>(boost::multiprecision::exp(lg));
    total += half_turn(c[2]) * turn(chi) * qf * (sg * mag);
  }
  long double th = to_double(data.char_turn(alpha, data.eta1())) + 0.5L * to_double(data.w()[2]);
  return turn_real(th * u) * total / double(data.order());
}

cplx oscillatory_nabla(const OrbifoldData& data, int alpha, int h, double u) {
  const auto& e = data.element(h);
  int sg = 0;
  HP lg = log_gamma_ratio(data, HP(u), e.c, &sg);
  if (sg == 0) return {0.0, 0.0};
  double mag = static_cast<double>(boost::multiprecision::exp(lg));
  long double th = to_double(data.char_turn(alpha, data.eta1())) + 0.5L * to_double(data.w()[2]);
  double sign = (e.age % 2) ? -1.0 : 1.0;
  return turn_real(th * u) / double(data.order()) * sign * half_turn(e.c[2]) * data.character(alpha, h) *
         (sg * mag);
}

cplx f_from_oscillatory(const OrbifoldData& data, int alpha, int beta, double u) {
  const int G = data.order();
  // e^{-u sum w log w} with log w3 = log|w3| + i pi
  double wlog = 0.0;
  for (int i = 0; i < 3; ++i) wlog += data.wd(i) * std::log(std::abs(data.wd(i)));
  long double th = to_double(data.char_turn(alpha, data.eta1())) + 0.5L * to_double(data.w()[2]);
  cplx pre = turn_real(-th * u) * std::exp(-u * wlog) / cplx(0.0, std::sqrt(2.0 * std::numbers::pi));
  cplx s(0.0, 0.0);
  for (int h = 0; h < G; ++h) {
    const auto& e = data.element(h);
    double sign = (e.age % 2) ? -1.0 : 1.0;
    cplx wp = data.w_power(std::array<Q, 3>{Q(1, 2) - e.c[0], Q(1, 2) - e.c[1], Q(1, 2) - e.c[2]});
    s += data.character(beta, data.inv(h)) * sign * std::pow(u, 1.5 - e.age) * wp *
         oscillatory_nabla(data, alpha, h, u);
  }
  return pre * s;
}

cplx f_series_value(const SeriesMatrix& f, int alpha, int beta, double u) {
  cplx s(0.0, 0.0);
  for (int k = f.K; k >= 0; --k) s = s / u + f(alpha, beta, k);
  return s;
}

StirlingReport stirling_check(const OrbifoldData& data, int h, const std::vector<double>& u, int M) {
  if (M < 0) throw ValidationError("truncation order must be >= 0");
  const auto& e = data.element(h);
  const auto& w = data.w();
  std::vector<HP> bsum(M + 1, HP(0));
  for (int m = 1; m <= M; ++m) {
    BigQ s(0);
    for (int i = 0; i < 3; ++i) {
      BigQ wm(1);
      for (int j = 0; j < m; ++j) wm *= to_big(w[i]);
      s += bernoulli_poly(m + 1, e.c[i]) / wm;
    }
    BigQ coef = (m % 2 ? BigQ(1) : BigQ(-1)) * s / BigQ(m * (m + 1));
    bsum[m] = HP(coef);
  }
  StirlingReport rep;
  rep.u = u;
  for (double uu : u) {
    const HP uh(uu);
    int sg = 0;
    HP lg = log_gamma_ratio(data, uh, e.c, &sg);
    // C_h^{-1} is real: sqrt(2 pi) u^{age-3/2} prod |w_i|^{c_i-1/2} exp(u sum w log|w|)
    HP lc = boost::multiprecision::log(2 * boost::math::constants::pi<HP>()) / 2 +
            HP(e.age - 1.5) * boost::multiprecision::log(uh);
    for (int i = 0; i < 3; ++i) {
      HP aw = boost::multiprecision::abs(hpq(w[i]));
      lc += (hpq(e.c[i]) - HP(0.5)) * boost::multiprecision::log(aw) + uh * hpq(w[i]) * boost::multiprecision::log(aw);
    }
    HP tr(0), up(1);
    for (int m = 1; m <= M; ++m) {
      up /= uh;
      tr += bsum[m] * up;
    }
    // the total phase of C_h^{-1} is 1, so a sign mismatch means a wrong branch
    HP ratio = sg * boost::multiprecision::exp(lg - lc - tr);
    rep.deviation.push_back(static_cast<double>(boost::multiprecision::abs(ratio - 1)));
  }
  rep.ok = rep.deviation.size() >= 2;
  const double expect = std::pow(2.0, M + 1);
  for (std::size_t i = 0; i + 1 < rep.deviation.size(); ++i) {
    double r = rep.deviation[i] / rep.deviation[i + 1];
    rep.ratio.push_back(r);
    double step = std::log2(rep.u[i + 1] / rep.u[i]);
    double want = std::pow(expect, step);
    if (!(r >= want / 3.0 && r <= want * 3.0)) rep.ok = false;
  }
  return rep;
}

WeightTables weight_tables_B(const OrbifoldData& data, int K, int D, cplx sqrt2) {
  const int G = data.order();
  WeightTables t;
  t.order = G;
  t.p = data.p();
  t.leg_size = data.m() * D;
  t.K = K;
  const double h1 = h1_zero(data);
  t.vertex_base = sqrt2 / h1;
  t.edge = b_check_table(data, K);
  auto F = f_matrix(data, K);
  auto hc = h_check_series(data, 0, K);

  t.dilaton.assign(static_cast<std::size_t>(G) * (K + 1), cplx(0.0, 0.0));
  for (int a = 0; a < G; ++a)
    for (int k = 1; k <= K; ++k) t.dilaton[a * (K + 1) + k] = -hc[k - 1] / sqrt2;

  t.primary.assign(static_cast<std::size_t>(G) * (K + 1) * std::max(t.p, 1), cplx(0.0, 0.0));
  for (int a = 0; a < G; ++a)
    for (int k = 0; k <= K; ++k)
      for (const auto& h : data.age1()) {
        cplx wc = data.w_power(data.element(h.index).c);
        cplx s(0.0, 0.0);
        for (int b = 0; b < G; ++b) s += F(a, b, k) * data.character(b, h.index);
        t.primary[(a * (K + 1) + k) * t.p + h.a - 1] = h1 * wc * s / sqrt2;
      }

  // xi-hat_{b,i} = (X d/dX)^i xi_{b,0}; the expansion carries one factor of sqrt(-2)
  const cplx branch = sqrt2 / sqrt_m2();
  std::vector<std::vector<cplx>> xi(G);
  for (int b = 0; b < G; ++b) {
    xi[b] = xi_expansion_psi(data, b, D);
    for (auto& x : xi[b]) x *= branch;
  }
  auto hat = [&](int b, int i, int x) { return xi[b][x] * std::pow(double(x % D + 1), i); };
  t.open.assign(static_cast<std::size_t>(G) * (K + 1) * t.leg_size, cplx(0.0, 0.0));
  for (int a = 0; a < G; ++a)
    for (int k = 0; k <= K; ++k) {
      cplx* o = &t.open[(a * (K + 1) + k) * t.leg_size];
      for (int x = 0; x < t.leg_size; ++x) {
        cplx v = hat(a, k, x);
        for (int i = 0; i < k; ++i)
          for (int b = 0; b < G; ++b) v -= t.E(a, b, k - 1 - i, 0) * hat(b, i, x);
        o[x] = -v / sqrt2;
      }
    }
  return t;
}

PotentialSeries unstable_B(const OrbifoldData& data, int n, int L, int D, UnstableSource src) {
  const int G = data.order();
  const int m = data.m();
  PotentialSeries F(0, n, data.p(), m, D, L, Basis::Psi);
  if (n != 1 && n != 2) return F;
  const double h1 = h1_zero(data);
  const bool curve = src.use_curve && curve_supported(data);
  std::vector<std::vector<cplx>> xi(G);
  for (int b = 0; b < G; ++b) xi[b] = xi_expansion_psi(data, b, D);
  auto dof = [&](int x) { return double(x % D + 1); };
  if (curve) {
    auto c = eo_potential(data, 0, n, D);
    std::copy(c.data.begin(), c.data.begin() + F.block(), F.data.begin());
  } else if (n == 1) {
    for (int b = 0; b < G; ++b)
      for (int x = 0; x < F.leg_size(); ++x) F.data[x] += h1 / 2.0 * xi[b][x] / (dof(x) * dof(x));
  } else {
    const int ls = F.leg_size();
    for (int b = 0; b < G; ++b)
      for (int x = 0; x < ls; ++x)
        for (int y = 0; y < ls; ++y) F.data[x * ls + y] += 0.5 * xi[b][x] * xi[b][y] / (dof(x) + dof(y));
  }
  if (n == 1 && L >= 1)
    for (const auto& h : data.age1()) {
      std::vector<int> e(data.p(), 0);
      e[h.a - 1] = 1;
      const int mon = F.monomial_index(e);
      cplx wc = data.w_power(data.element(h.index).c);
      for (int b = 0; b < G; ++b) {
        // same curve-side route as the tau^0 term: 1/(|G| sqrt(-2 w1 w2 w3)) = h_1/2
        cplx c = h1 / 2.0 * data.character(b, h.index) * wc;
        for (int x = 0; x < F.leg_size(); ++x) F.data[mon * F.block() + x] += c * xi[b][x] / dof(x);
      }
    }
  F.meta["unstable"] = curve ? "curve" : "closed form";
  return F;
}

PotentialSeries f_gn_B(const OrbifoldData& data, int g, int n, int L, int D, UnstableSource src) {
  if (g < 0 || n < 1 || L < 0 || D < 1) throw ValidationError("need g >= 0, n >= 1, tau-degree >= 0, winding >= 1");
  PotentialSeries F(g, n, data.p(), data.m(), D, L, Basis::Psi);
  std::vector<std::vector<DecoratedGraph>> graphs(L + 1);
  int K = 0;
  long long count = 0;
  for (int l = 0; l <= L; ++l) {
    if (l > 0 && data.p() == 0) break;
    graphs[l] = enumerate_graphs(g, n, l);
    for (const auto& gr : graphs[l]) K = std::max(K, gr.max_height());
    count += static_cast<long long>(graphs[l].size());
  }
  if (count > 0) {
    auto t = weight_tables_B(data, K, D);
    const cplx global = (g % 2 == 1) ? 1.0 : -1.0;  // (-1)^{g-1}
    for (int l = 0; l <= L; ++l) sum_graphs(graphs[l], t, global, l, F);
  }
  if (g == 0 && (n == 1 || n == 2)) {
    auto u = unstable_B(data, n, L, D, src);
    F += u;
    F.meta["unstable"] = u.meta["unstable"];
  }
  F.meta["side"] = "b";
  F.meta["graphs"] = count;
  return F;
}

GraphRatioReport per_graph_ratio(const OrbifoldData& data, int g, int n, int L, int D) {
  GraphRatioReport rep;
  const int G = data.order();
  const cplx factor = ((g - 1 + n) % 2 == 0 ? 1.0 : -1.0) * std::pow(double(G), n);
  const cplx global = (g % 2 == 1) ? 1.0 : -1.0;
  for (int l = 0; l <= L; ++l) {
    if (l > 0 && data.p() == 0) break;
    auto graphs = enumerate_graphs(g, n, l);
    if (graphs.empty()) continue;
    int K = 0;
    for (const auto& gr : graphs) K = std::max(K, gr.max_height());
    auto ta = weight_tables_A(data, K, D);
    auto tb = weight_tables_B(data, K, D);
    std::vector<cplx> wa, wb;
    for (const auto& gr : graphs) {
      ++rep.graphs;
      const int V = gr.core.vertices();
      std::vector<int> alpha(V, 0);
      while (true) {
        std::fill(wa.begin(), wa.end(), cplx(0.0, 0.0));
        std::fill(wb.begin(), wb.end(), cplx(0.0, 0.0));
        add_graph_weight(gr, alpha, ta, 1.0, wa);
        add_graph_weight(gr, alpha, tb, global, wb);
        if (!wa.empty()) legs_prime_to_psi(wa, n, data.m(), D);
        const std::size_t N = std::max(wa.size(), wb.size());
        double scale = 0.0, dev = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
          cplx a = i < wa.size() ? factor * wa[i] : cplx(0.0, 0.0);
          cplx b = i < wb.size() ? wb[i] : cplx(0.0, 0.0);
          scale = std::max({scale, std::abs(a), std::abs(b)});
        }
        if (scale > 0.0) {
          ++rep.weighted;
          for (std::size_t i = 0; i < N; ++i) {
            cplx a = i < wa.size() ? factor * wa[i] : cplx(0.0, 0.0);
            cplx b = i < wb.size() ? wb[i] : cplx(0.0, 0.0);
            dev = std::max(dev, std::abs(a - b) / scale);
          }
          if (dev > rep.max_deviation) {
            rep.max_deviation = dev;
            std::ostringstream os;
            os << gr.describe() << " alpha=";
            for (int x : alpha) os << x << ' ';
            rep.worst = os.str();
          }
        }
        int v = V - 1;
        while (v >= 0 && ++alpha[v] == G) alpha[v--] = 0;
        if (v < 0) break;
      }
    }
  }
  return rep;
}

}  // namespace ocgw
