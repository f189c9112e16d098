#include "ocgw/amodel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ocgw/special.hpp"

namespace ocgw {

namespace {

// E_h(z) = exp(sum_m (-1)^m/(m(m+1)) sum_i B_{m+1}(c_i(h)) (z/w_i)^m), exact
std::vector<BigQ> e_series(const OrbifoldData& data, int h, int K) {
  const auto& c = data.element(h).c;
  std::vector<BigQ> a(K + 1, BigQ(0));
  for (int m = 1; m <= K; ++m) {
    BigQ s(0);
    for (int i = 0; i < 3; ++i) {
      BigQ inv = BigQ(1) / to_big(data.w()[i]);
      BigQ p(1);
      for (int j = 0; j < m; ++j) p *= inv;
      s += bernoulli_poly(m + 1, c[i]) * p;
    }
    BigQ sign = (m % 2 == 0) ? BigQ(1) : BigQ(-1);
    a[m] = sign * s / BigQ(m * (m + 1));
  }
  return exp_series_q(a);
}

cplx minus_phase(int k, int m) { return -turn(Q(-k, 2 * m)); }  // -(-1)^{-k/m}

}  // namespace

SeriesMatrix r_matrix(const OrbifoldData& data, int K) {
  const int G = data.order();
  SeriesMatrix R(G, K);
  std::vector<std::vector<double>> E(G);
  for (int h = 0; h < G; ++h) {
    auto e = e_series(data, h, K);
    E[h].resize(K + 1);
    for (int k = 0; k <= K; ++k) E[h][k] = big_to_double(e[k]);
  }
  for (int a = 0; a < G; ++a)
    for (int b = 0; b < G; ++b)
      for (int h = 0; h < G; ++h) {
        cplx ch = turn(data.char_turn(a, h) + data.char_turn(b, data.inv(h))) / double(G);
        for (int k = 0; k <= K; ++k) R.ref(a, b, k) += ch * E[h][k];
      }
  return R;
}

double symplectic_defect(const SeriesMatrix& R) {
  const int G = R.order, K = R.K;
  double worst = 0.0;
  for (int a = 0; a < G; ++a)
    for (int b = 0; b < G; ++b)
      for (int n = 0; n <= K; ++n) {
        cplx s = (n == 0 && a == b) ? cplx(-1.0, 0.0) : cplx(0.0, 0.0);
        for (int g = 0; g < G; ++g)
          for (int i = 0; i <= n; ++i) s += R(g, a, i) * R(g, b, n - i) * ((n - i) % 2 ? -1.0 : 1.0);
        worst = std::max(worst, std::abs(s));
      }
  return worst;
}

std::vector<cplx> edge_quotient(const SeriesMatrix& S, int K, double* remainder) {
  const int G = S.order;
  const int T = 2 * K + 1;  // total degree needed
  if (S.K < T) throw WindowError("edge series order too small");
  std::vector<cplx> E(static_cast<std::size_t>(G) * G * (K + 1) * (K + 1));
  double rem = 0.0;
  std::vector<cplx> n((T + 1) * (T + 1));
  for (int a = 0; a < G; ++a)
    for (int b = 0; b < G; ++b) {
      std::fill(n.begin(), n.end(), cplx(0.0, 0.0));
      for (int i = 0; i <= T; ++i)
        for (int j = 0; i + j <= T; ++j) {
          cplx s = (i == 0 && j == 0 && a == b) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
          for (int g = 0; g < G; ++g) s -= S(g, a, i) * S(g, b, j);
          n[i * (T + 1) + j] = s;
        }
      for (int d = 0; d <= T; ++d) {
        cplx r(0.0, 0.0);
        for (int i = 0; i <= d; ++i) r += (i % 2 ? -1.0 : 1.0) * n[i * (T + 1) + d - i];
        rem = std::max(rem, std::abs(r));
      }
      for (int k = 0; k <= K; ++k)
        for (int l = 0; l <= K; ++l) {
          cplx q(0.0, 0.0);
          for (int j = 0; j <= l; ++j) q += (j % 2 ? -1.0 : 1.0) * n[(k + 1 + j) * (T + 1) + l - j];
          E[((static_cast<std::size_t>(a) * G + b) * (K + 1) + k) * (K + 1) + l] = q;
        }
    }
  if (remainder) *remainder = rem;
  return E;
}

std::vector<cplx> edge_weights_A(const OrbifoldData& data, int K, double* remainder) {
  auto R = r_matrix(data, 2 * K + 1);
  SeriesMatrix S(R.order, R.K);
  for (int g = 0; g < R.order; ++g)
    for (int a = 0; a < R.order; ++a)
      for (int k = 0; k <= R.K; ++k) S.ref(g, a, k) = R(g, a, k) * (k % 2 ? -1.0 : 1.0);
  return edge_quotient(S, K, remainder);
}

cplx disk_function(const OrbifoldData& data, long long d0, int k) {
  const int h = data.winding_element(d0, k);
  const auto& e = data.element(h);
  const auto& w = data.w();
  const int m = data.m();
  long long fl = floor_q(Q(d0) * w[2] + Q(k, m));
  double sign = (fl % 2 == 0) ? 1.0 : -1.0;
  double g = gamma_ratio(Q(d0) * (w[0] + w[1]) + e.c[2], Q(d0) * w[0] - e.c[0] + Q(1), Q(d0) * w[1] - e.c[1] + Q(1));
  double pw = std::pow(static_cast<double>(d0), 1 - e.age);
  return cplx(-sign * pw * g / m, 0.0);
}

std::vector<cplx> phi_series(const OrbifoldData& data, int h, int a, int D) {
  const int m = data.m();
  std::vector<cplx> v(static_cast<std::size_t>(m) * D);
  for (int k = 0; k < m; ++k)
    for (int d = 1; d <= D; ++d) {
      if (data.winding_element(d, k) != h) continue;
      v[k * D + d - 1] = disk_function(data, d, k) * std::pow(double(d), a) * minus_phase(k, m) / double(data.order());
    }
  return v;
}

std::vector<cplx> xi_tilde(const OrbifoldData& data, int gamma, int a, int D) {
  if (a < -2) throw ValidationError("xi_tilde index a must be >= -2");
  if (D < 1) throw ValidationError("winding window must be >= 1");
  const int m = data.m();
  std::vector<cplx> v(static_cast<std::size_t>(m) * D);
  for (int k = 0; k < m; ++k)
    for (int d = 1; d <= D; ++d) {
      const int h = data.winding_element(d, k);
      const auto& c = data.element(h).c;
      cplx wp = data.w_power(std::array<Q, 3>{Q(1) - c[0], Q(1) - c[1], Q(1) - c[2]});
      cplx ch = data.character(gamma, data.inv(h));
      v[k * D + d - 1] = ch * wp * disk_function(data, d, k) * std::pow(double(d), a) * minus_phase(k, m);
    }
  return v;
}

WeightTables weight_tables_A(const OrbifoldData& data, int K, int D) {
  const int G = data.order();
  WeightTables t;
  t.order = G;
  t.p = data.p();
  t.leg_size = data.m() * D;
  t.K = K;
  const cplx sw = data.sqrt_w123();
  t.vertex_base = double(G) * sw;
  t.edge = edge_weights_A(data, K);
  auto R = r_matrix(data, K + 1);
  auto Rm = [&](int b, int a, int k) { return R(b, a, k) * (k % 2 ? -1.0 : 1.0); };  // [z^k] R(-z)^b_a
  const cplx pref = 1.0 / (double(G) * sw);

  t.dilaton.assign(static_cast<std::size_t>(G) * (K + 1), cplx(0.0, 0.0));
  for (int a = 0; a < G; ++a)
    for (int k = 1; k <= K; ++k) {
      cplx s(0.0, 0.0);
      for (int b = 0; b < G; ++b) s += Rm(b, a, k - 1);
      t.dilaton[a * (K + 1) + k] = -pref * s;
    }

  t.primary.assign(static_cast<std::size_t>(G) * (K + 1) * std::max(t.p, 1), cplx(0.0, 0.0));
  for (int a = 0; a < G; ++a)
    for (int k = 0; k <= K; ++k)
      for (const auto& h : data.age1()) {
        cplx wc = data.w_power(data.element(h.index).c);
        cplx s(0.0, 0.0);
        for (int b = 0; b < G; ++b) s += Rm(b, a, k) * data.character(b, h.index);
        t.primary[(a * (K + 1) + k) * t.p + h.a - 1] = pref * wc * s;
      }

  std::vector<std::vector<std::vector<cplx>>> xi(G);
  for (int b = 0; b < G; ++b)
    for (int i = 0; i <= K; ++i) xi[b].push_back(xi_tilde(data, b, i, D));
  t.open.assign(static_cast<std::size_t>(G) * (K + 1) * t.leg_size, cplx(0.0, 0.0));
  for (int a = 0; a < G; ++a)
    for (int k = 0; k <= K; ++k) {
      cplx* o = &t.open[(a * (K + 1) + k) * t.leg_size];
      for (int b = 0; b < G; ++b)
        for (int i = 0; i <= k; ++i) {
          cplx c = pref * Rm(b, a, k - i);
          for (int x = 0; x < t.leg_size; ++x) o[x] += c * xi[b][i][x];
        }
    }
  return t;
}

PotentialSeries unstable_A(const OrbifoldData& data, int n, int L, int D) {
  const int G = data.order();
  const int m = data.m();
  PotentialSeries F(0, n, data.p(), m, D, L, Basis::Prime);
  const double w = to_double(data.w()[0] * data.w()[1] * data.w()[2]);
  const double pref = 1.0 / (double(G) * G * w);
  if (n == 1) {
    for (int gm = 0; gm < G; ++gm) {
      auto x = xi_tilde(data, gm, -2, D);
      for (int i = 0; i < F.leg_size(); ++i) F.data[i] += pref * x[i];
    }
    if (L >= 1)
      for (const auto& h : data.age1()) {
        std::vector<int> e(data.p(), 0);
        e[h.a - 1] = 1;
        const int mon = F.monomial_index(e);
        cplx wc = data.w_power(data.element(h.index).c);
        for (int gm = 0; gm < G; ++gm) {
          auto x = xi_tilde(data, gm, -1, D);
          cplx c = pref * wc * data.character(gm, h.index);
          for (int i = 0; i < F.leg_size(); ++i) F.data[mon * F.block() + i] += c * x[i];
        }
      }
  } else if (n == 2) {
    for (int gm = 0; gm < G; ++gm) {
      auto x = xi_tilde(data, gm, 0, D);
      for (int k1 = 0; k1 < m; ++k1)
        for (int d1 = 1; d1 <= D; ++d1)
          for (int k2 = 0; k2 < m; ++k2)
            for (int d2 = 1; d2 <= D; ++d2)
              F.at(0, {k1 * D + d1 - 1, k2 * D + d2 - 1}) +=
                  pref * x[k1 * D + d1 - 1] * x[k2 * D + d2 - 1] / double(d1 + d2);
    }
  }
  F.meta["unstable"] = "closed form";
  return F;
}

PotentialSeries disk_direct_A(const OrbifoldData& data, int L, int D) {
  PotentialSeries F(0, 1, data.p(), data.m(), D, L, Basis::Prime);
  auto x = phi_series(data, data.identity(), -2, D);
  for (int i = 0; i < F.leg_size(); ++i) F.data[i] = x[i];
  if (L >= 1)
    for (const auto& h : data.age1()) {
      std::vector<int> e(data.p(), 0);
      e[h.a - 1] = 1;
      const int mon = F.monomial_index(e);
      auto y = phi_series(data, h.index, -1, D);
      for (int i = 0; i < F.leg_size(); ++i) F.data[mon * F.block() + i] = y[i];
    }
  return F;
}

PotentialSeries f_gn_A(const OrbifoldData& data, int g, int n, int L, int D) {
  if (g < 0 || n < 1 || L < 0 || D < 1) throw ValidationError("need g >= 0, n >= 1, tau-degree >= 0, winding >= 1");
  PotentialSeries F(g, n, data.p(), data.m(), D, L, Basis::Prime);
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
    auto t = weight_tables_A(data, K, D);
    for (int l = 0; l <= L; ++l) sum_graphs(graphs[l], t, cplx(1.0, 0.0), l, F);
  }
  if (g == 0 && (n == 1 || n == 2)) F += unstable_A(data, n, L, D);
  F.meta["side"] = "a";
  F.meta["graphs"] = count;
  return F;
}

}  // namespace ocgw
