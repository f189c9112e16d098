#include "ocgw/potential.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>

#include "ocgw/kernels.hpp"
#include "ocgw/psi.hpp"

namespace ocgw {

namespace {

void monomials_of_degree(int p, int deg, std::vector<int>& cur, int i, std::vector<std::vector<int>>& out) {
  if (i == p - 1) {
    cur[i] = deg;
    out.push_back(cur);
    return;
  }
  for (int x = deg; x >= 0; --x) {
    cur[i] = x;
    monomials_of_degree(p, deg - x, cur, i + 1, out);
  }
}

std::vector<std::vector<int>> degree_monomials(int p, int deg) {
  std::vector<std::vector<int>> out;
  if (p == 0) {
    if (deg == 0) out.push_back({});
    return out;
  }
  std::vector<int> cur(p, 0);
  monomials_of_degree(p, deg, cur, 0, out);
  return out;
}

std::atomic<int> g_workers{0};

}  // namespace

std::vector<std::vector<int>> tau_monomials(int p, int L) {
  std::vector<std::vector<int>> out;
  for (int d = 0; d <= L; ++d)
    for (auto& e : degree_monomials(p, d)) out.push_back(std::move(e));
  return out;
}

PotentialSeries::PotentialSeries(int g_, int n_, int p_, int m_, int D_, int L_, Basis b)
    : g(g_), n(n_), p(p_), m(m_), D(D_), L(L_), basis(b) {
  monomials = tau_monomials(p, L);
  data.assign(monomials.size() * block(), cplx(0.0, 0.0));
}

std::size_t PotentialSeries::block() const {
  std::size_t b = 1;
  for (int j = 0; j < n; ++j) b *= static_cast<std::size_t>(leg_size());
  return b;
}

int PotentialSeries::monomial_index(const std::vector<int>& e) const {
  for (std::size_t i = 0; i < monomials.size(); ++i)
    if (monomials[i] == e) return static_cast<int>(i);
  return -1;
}

static std::size_t leg_offset(const PotentialSeries& s, const std::vector<int>& legs) {
  std::size_t idx = 0;
  for (int j = 0; j < s.n; ++j) idx = idx * s.leg_size() + legs[j];
  return idx;
}

cplx& PotentialSeries::at(int mon, const std::vector<int>& legs) { return data[mon * block() + leg_offset(*this, legs)]; }

cplx PotentialSeries::at(int mon, const std::vector<int>& legs) const {
  return data[mon * block() + leg_offset(*this, legs)];
}

cplx PotentialSeries::coeff(const std::vector<int>& tau, const std::vector<std::pair<int, int>>& legs) const {
  int mon = monomial_index(tau);
  if (mon < 0) throw WindowError("tau monomial outside the window");
  std::vector<int> li;
  for (auto [d, c] : legs) {
    if (d < 1 || d > D || c < 0 || c >= m) throw WindowError("leg outside the window");
    li.push_back(c * D + d - 1);
  }
  return at(mon, li);
}

void legs_prime_to_psi(std::vector<cplx>& v, int n, int m, int D) {
  const int ls = m * D;
  std::size_t B = 1;
  for (int j = 0; j < n; ++j) B *= ls;
  if (B == 0 || v.size() % B != 0) throw std::invalid_argument("leg layout mismatch");
  const std::size_t nmon = v.size() / B;
  std::vector<cplx> fiber(m);
  // leg j has stride ls^{n-1-j}
  for (int j = 0; j < n; ++j) {
    std::size_t stride = 1;
    for (int i = j + 1; i < n; ++i) stride *= ls;
    for (std::size_t mon = 0; mon < nmon; ++mon) {
      cplx* base = &v[mon * B];
      for (std::size_t idx = 0; idx < B; ++idx) {
        std::size_t leg = (idx / stride) % ls;
        if (leg >= static_cast<std::size_t>(D)) continue;  // start each fiber at class 0
        for (int c = 0; c < m; ++c) fiber[c] = base[idx + c * D * stride];
        auto w = prime_to_psi_coords(fiber);
        for (int c = 0; c < m; ++c) base[idx + c * D * stride] = w[c];
      }
    }
  }
}

PotentialSeries PotentialSeries::to_psi() const {
  if (basis == Basis::Psi) return *this;
  PotentialSeries r = *this;
  r.basis = Basis::Psi;
  legs_prime_to_psi(r.data, n, m, D);
  return r;
}

PotentialSeries& PotentialSeries::operator+=(const PotentialSeries& o) {
  if (o.data.size() != data.size() || o.basis != basis) throw std::invalid_argument("potential shape mismatch");
  kernels::caxpy(data.size(), cplx(1.0, 0.0), o.data.data(), data.data());
  return *this;
}

PotentialSeries PotentialSeries::scaled(cplx s) const {
  PotentialSeries r = *this;
  for (auto& x : r.data) x *= s;
  return r;
}

double PotentialSeries::max_abs() const {
  double mx = 0.0;
  for (const auto& x : data) mx = std::max(mx, std::abs(x));
  return mx;
}

ojson PotentialSeries::to_json(double drop_below) const {
  struct Entry {
    std::vector<int> tau;
    std::vector<std::pair<int, int>> legs;
    cplx v;
  };
  std::vector<Entry> entries;
  const std::size_t B = block();
  const int ls = leg_size();
  for (std::size_t mon = 0; mon < monomials.size(); ++mon)
    for (std::size_t idx = 0; idx < B; ++idx) {
      cplx v = data[mon * B + idx];
      if (v == cplx(0.0, 0.0) || std::abs(v) < drop_below) continue;
      Entry e{monomials[mon], {}, v};
      std::size_t rem = idx;
      std::vector<std::pair<int, int>> legs(n);
      for (int j = n - 1; j >= 0; --j) {
        int leg = static_cast<int>(rem % ls);
        rem /= ls;
        legs[j] = {leg % D + 1, leg / D};
      }
      e.legs = legs;
      entries.push_back(std::move(e));
    }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.tau != b.tau) return a.tau < b.tau;
    return a.legs < b.legs;
  });
  ojson j;
  j["g"] = g;
  j["n"] = n;
  j["basis"] = basis == Basis::Prime ? "prime" : "psi";
  auto arr = ojson::array();
  for (const auto& e : entries) {
    ojson c;
    c["tau"] = e.tau;
    auto legs = ojson::array();
    for (auto [d, k] : e.legs) legs.push_back(ojson{{"d", d}, {"k", k}});
    c["legs"] = legs;
    c["re"] = e.v.real();
    c["im"] = e.v.imag();
    arr.push_back(c);
  }
  j["coefficients"] = arr;
  if (!meta.empty()) j["meta"] = meta;
  return j;
}

double relative_deviation(const PotentialSeries& a, const PotentialSeries& b, cplx s, double rel_floor) {
  if (a.data.size() != b.data.size()) throw std::invalid_argument("potential shape mismatch");
  double scale = std::max(a.max_abs(), std::abs(s) * b.max_abs());
  double floor = rel_floor * scale;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    cplx x = a.data[i], y = s * b.data[i];
    double big = std::max(std::abs(x), std::abs(y));
    if (big == 0.0) continue;
    // below the floor a coefficient counts as a structural zero: compare on the overall scale
    worst = std::max(worst, std::abs(x - y) / (big > floor ? big : scale));
  }
  return worst;
}

void add_graph_weight(const DecoratedGraph& gr, const std::vector<int>& alpha, const WeightTables& t, cplx global,
                      std::vector<cplx>& out) {
  const CoreGraph& c = gr.core;
  if (gr.max_height() > t.K) throw WindowError("height window too small for graph " + gr.describe());
  cplx s = global / static_cast<double>(gr.aut);
  for (int v = 0; v < c.vertices(); ++v) {
    auto ks = gr.vertex_heights(v);
    double psi = psi_intersection_d(c.genus[v], ks);
    if (psi == 0.0) return;
    int ex = 2 * c.genus[v] - 2 + static_cast<int>(ks.size());
    s *= psi * std::pow(t.vertex_base, ex);
    for (int k : gr.dil_heights[v]) s *= t.Dl(alpha[v], k);
  }
  for (std::size_t e = 0; e < c.edges.size(); ++e)
    s *= t.E(alpha[c.edges[e][0]], alpha[c.edges[e][1]], gr.edge_heights[e][0], gr.edge_heights[e][1]);
  if (s == cplx(0.0, 0.0)) return;

  // tau polynomial of the primary leaves
  std::map<std::vector<int>, cplx> poly{{std::vector<int>(t.p, 0), cplx(1.0, 0.0)}};
  for (int v = 0; v < c.vertices(); ++v)
    for (int k : gr.prim_heights[v]) {
      const cplx* lin = t.P(alpha[v], k);
      std::map<std::vector<int>, cplx> next;
      for (const auto& [e, x] : poly)
        for (int a = 0; a < t.p; ++a) {
          if (lin[a] == cplx(0.0, 0.0)) continue;
          auto e2 = e;
          ++e2[a];
          next[e2] += x * lin[a];
        }
      poly = std::move(next);
    }
  if (poly.empty()) return;

  // open-leaf tensor
  std::vector<cplx> tensor{cplx(1.0, 0.0)};
  for (std::size_t j = 0; j < c.open_at.size(); ++j) {
    const cplx* o = t.O(alpha[c.open_at[j]], gr.open_heights[j]);
    std::vector<cplx> next(tensor.size() * t.leg_size);
    for (std::size_t i = 0; i < tensor.size(); ++i)
      kernels::caxpy(t.leg_size, tensor[i], o, &next[i * t.leg_size]);
    tensor = std::move(next);
  }

  int l = 0;
  for (int v = 0; v < c.vertices(); ++v) l += static_cast<int>(gr.prim_heights[v].size());
  auto mons = degree_monomials(t.p, l);
  const std::size_t B = tensor.size();
  if (out.size() != mons.size() * B) out.assign(mons.size() * B, cplx(0.0, 0.0));
  for (std::size_t mi = 0; mi < mons.size(); ++mi) {
    auto it = poly.find(mons[mi]);
    if (it == poly.end()) continue;
    kernels::caxpy(B, s * it->second, tensor.data(), &out[mi * B]);
  }
}

void sum_graphs(const std::vector<DecoratedGraph>& graphs, const WeightTables& t, cplx global, int l,
                PotentialSeries& target) {
  if (graphs.empty()) return;
  auto mons = degree_monomials(t.p, l);
  if (mons.empty()) return;
  const std::size_t B = target.block();
  const std::size_t nb = std::min<std::size_t>(64, graphs.size());
  std::vector<std::vector<cplx>> partial(nb, std::vector<cplx>(mons.size() * B, cplx(0.0, 0.0)));
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t b = next++; b < nb; b = next++) {
      std::size_t lo = graphs.size() * b / nb, hi = graphs.size() * (b + 1) / nb;
      for (std::size_t i = lo; i < hi; ++i) {
        const auto& gr = graphs[i];
        const int V = gr.core.vertices();
        std::vector<int> alpha(V, 0);
        while (true) {
          add_graph_weight(gr, alpha, t, global, partial[b]);
          int v = V - 1;
          while (v >= 0 && ++alpha[v] == t.order) alpha[v--] = 0;
          if (v < 0) break;
        }
      }
    }
  };
  const int nw = std::max(1, std::min<int>(workers(), static_cast<int>(nb)));
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex err_mu;
  auto guarded = [&]() {
    try {
      work();
    } catch (...) {
      std::lock_guard<std::mutex> lock(err_mu);
      if (!err) err = std::current_exception();
      next = nb;
    }
  };
  for (int w = 1; w < nw; ++w) pool.emplace_back(guarded);
  guarded();
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
  for (std::size_t mi = 0; mi < mons.size(); ++mi) {
    int ti = target.monomial_index(mons[mi]);
    if (ti < 0) continue;
    for (std::size_t b = 0; b < nb; ++b)
      kernels::caxpy(B, cplx(1.0, 0.0), &partial[b][mi * B], &target.data[ti * B]);
  }
}

int workers() {
  int w = g_workers.load();
  if (w > 0) return w;
  if (const char* env = std::getenv("OCGW_WORKERS")) {
    int e = std::atoi(env);
    if (e > 0) return e;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

void set_workers(int n) { g_workers = n; }

}  // namespace ocgw
