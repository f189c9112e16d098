#include "ocgw/graphs.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace ocgw {

int CoreGraph::total_genus() const {
  int s = std::accumulate(genus.begin(), genus.end(), 0);
  return s + static_cast<int>(edges.size()) - vertices() + 1;
}

int CoreGraph::valence(int v) const {
  int val = prim[v] + dil[v];
  for (int o : open_at) val += (o == v);
  for (const auto& e : edges) val += (e[0] == v) + (e[1] == v);
  return val;
}

namespace {

int open_mask(const CoreGraph& g, int v) {
  int mask = 0;
  for (std::size_t j = 0; j < g.open_at.size(); ++j)
    if (g.open_at[j] == v) mask |= 1 << j;
  return mask;
}

using Inv = std::array<int, 6>;

Inv invariant(const CoreGraph& g, int v) {
  int loops = 0;
  for (const auto& e : g.edges) loops += (e[0] == v && e[1] == v);
  return {g.genus[v], g.prim[v], g.dil[v], open_mask(g, v), loops, g.valence(v)};
}

// perm[new] = old
std::vector<int> encode(const CoreGraph& g, const std::vector<int>& perm) {
  const int V = g.vertices();
  std::vector<int> pos(V);
  for (int i = 0; i < V; ++i) pos[perm[i]] = i;
  std::vector<int> key{V};
  for (int i = 0; i < V; ++i) {
    int v = perm[i];
    key.push_back(g.genus[v]);
    key.push_back(g.prim[v]);
    key.push_back(g.dil[v]);
    key.push_back(open_mask(g, v));
  }
  std::vector<int> mult(V * V, 0);
  for (const auto& e : g.edges) {
    int a = pos[e[0]], b = pos[e[1]];
    if (a > b) std::swap(a, b);
    ++mult[a * V + b];
  }
  for (int a = 0; a < V; ++a)
    for (int b = a; b < V; ++b) key.push_back(mult[a * V + b]);
  return key;
}

// Calls fn(perm) for every permutation that keeps vertices inside their invariant block.
// Vertices are first ordered by invariant; perm[new] = old.
void for_block_perms(const CoreGraph& g, const std::function<void(const std::vector<int>&)>& fn) {
  const int V = g.vertices();
  std::vector<int> order(V);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Inv> inv(V);
  for (int v = 0; v < V; ++v) inv[v] = invariant(g, v);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return inv[a] < inv[b]; });
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < V;) {
    int j = i;
    while (j < V && inv[order[j]] == inv[order[i]]) ++j;
    blocks.push_back({i, j});
    i = j;
  }
  std::vector<int> perm = order;
  for (auto& b : blocks) std::sort(perm.begin() + b.first, perm.begin() + b.second);
  std::function<void(std::size_t)> rec = [&](std::size_t bi) {
    if (bi == blocks.size()) {
      fn(perm);
      return;
    }
    auto [lo, hi] = blocks[bi];
    std::sort(perm.begin() + lo, perm.begin() + hi);
    do {
      rec(bi + 1);
    } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
    std::sort(perm.begin() + lo, perm.begin() + hi);
  };
  rec(0);
}

CoreGraph relabel(const CoreGraph& g, const std::vector<int>& perm) {
  const int V = g.vertices();
  std::vector<int> pos(V);
  for (int i = 0; i < V; ++i) pos[perm[i]] = i;
  CoreGraph r;
  r.genus.resize(V);
  r.prim.resize(V);
  r.dil.resize(V);
  for (int i = 0; i < V; ++i) {
    r.genus[i] = g.genus[perm[i]];
    r.prim[i] = g.prim[perm[i]];
    r.dil[i] = g.dil[perm[i]];
  }
  for (int o : g.open_at) r.open_at.push_back(pos[o]);
  for (const auto& e : g.edges) {
    int a = pos[e[0]], b = pos[e[1]];
    if (a > b) std::swap(a, b);
    r.edges.push_back({a, b});
  }
  std::sort(r.edges.begin(), r.edges.end());
  return r;
}

CoreGraph canonicalize(const CoreGraph& g) {
  std::vector<int> best_key, best_perm;
  for_block_perms(g, [&](const std::vector<int>& perm) {
    auto k = encode(g, perm);
    if (best_key.empty() || k < best_key) {
      best_key = k;
      best_perm = perm;
    }
  });
  return relabel(g, best_perm);
}

bool stable_at(const CoreGraph& g, int v) { return 2 * g.genus[v] - 2 + g.valence(v) > 0; }

bool feasible(const CoreGraph& g) {
  for (int v = 0; v < g.vertices(); ++v) {
    if (!stable_at(g, v)) return false;
    if (g.dim(v) < 2 * g.dil[v]) return false;
  }
  return true;
}

std::vector<CoreGraph> degenerations(const CoreGraph& g) {
  std::vector<CoreGraph> out;
  const int V = g.vertices();
  for (int v = 0; v < V; ++v) {
    if (g.genus[v] >= 1) {
      CoreGraph c = g;
      --c.genus[v];
      c.edges.push_back({v, v});
      out.push_back(c);
    }
    // split v into v and a new vertex nv
    const int nv = V;
    std::vector<int> inc;  // edge indices touching v
    for (std::size_t e = 0; e < g.edges.size(); ++e)
      if (g.edges[e][0] == v || g.edges[e][1] == v) inc.push_back(static_cast<int>(e));
    std::vector<int> opens;
    for (std::size_t j = 0; j < g.open_at.size(); ++j)
      if (g.open_at[j] == v) opens.push_back(static_cast<int>(j));
    std::vector<int> choice(inc.size(), 0);
    std::function<void(std::size_t, CoreGraph&)> edge_rec = [&](std::size_t i, CoreGraph& c) {
      if (i == inc.size()) {
        for (int g1 = 0; g1 <= g.genus[v]; ++g1)
          for (int om = 0; om < (1 << opens.size()); ++om)
            for (int p1 = 0; p1 <= g.prim[v]; ++p1)
              for (int d1 = 0; d1 <= g.dil[v]; ++d1) {
                CoreGraph x = c;
                x.genus[v] = g1;
                x.genus[nv] = g.genus[v] - g1;
                for (std::size_t b = 0; b < opens.size(); ++b)
                  if (om & (1 << b)) x.open_at[opens[b]] = nv;
                x.prim[v] = p1;
                x.prim[nv] = g.prim[v] - p1;
                x.dil[v] = d1;
                x.dil[nv] = g.dil[v] - d1;
                x.edges.push_back({v, nv});
                if (feasible(x)) out.push_back(x);
              }
        return;
      }
      auto e = g.edges[inc[i]];
      const bool loop = e[0] == v && e[1] == v;
      const int options = loop ? 3 : 2;
      for (int o = 0; o < options; ++o) {
        auto saved = c.edges[inc[i]];
        if (loop) {
          if (o == 1) c.edges[inc[i]] = {nv, nv};
          if (o == 2) c.edges[inc[i]] = {v, nv};
        } else if (o == 1) {
          int other = e[0] == v ? e[1] : e[0];
          c.edges[inc[i]] = {std::min(other, nv), std::max(other, nv)};
        }
        edge_rec(i + 1, c);
        c.edges[inc[i]] = saved;
      }
    };
    CoreGraph base = g;
    base.genus.push_back(0);
    base.prim.push_back(0);
    base.dil.push_back(0);
    edge_rec(0, base);
  }
  return out;
}

// Automorphisms of a canonical core graph: vertex map and half-edge map (h = 2e + side).
struct CoreAut {
  std::vector<int> vmap;
  std::vector<int> hmap;
};

std::vector<CoreAut> core_automorphisms(const CoreGraph& g) {
  const int V = g.vertices();
  const int E = static_cast<int>(g.edges.size());
  std::vector<int> ident(V);
  std::iota(ident.begin(), ident.end(), 0);
  const auto key0 = encode(g, ident);
  std::vector<CoreAut> out;
  for_block_perms(g, [&](const std::vector<int>& perm) {
    if (encode(g, perm) != key0) return;
    // perm[new] = old, so sigma(old) = new
    std::vector<int> sigma(V);
    for (int i = 0; i < V; ++i) sigma[perm[i]] = i;
    std::map<std::array<int, 2>, std::vector<int>> groups;
    for (int e = 0; e < E; ++e) groups[g.edges[e]].push_back(e);
    std::vector<std::vector<std::vector<int>>> local;  // per group: list of partial hmaps
    std::vector<std::vector<int>> partials{std::vector<int>(2 * E, -1)};
    for (const auto& [ends, src] : groups) {
      std::array<int, 2> tgt{sigma[ends[0]], sigma[ends[1]]};
      const bool swapped = tgt[0] > tgt[1];
      if (swapped) std::swap(tgt[0], tgt[1]);
      const auto& dst = groups.at(tgt);
      const bool loop = ends[0] == ends[1];
      const int k = static_cast<int>(src.size());
      std::vector<int> bij(k);
      std::iota(bij.begin(), bij.end(), 0);
      std::vector<std::vector<int>> next;
      do {
        const int flips = loop ? (1 << k) : 1;
        for (int fm = 0; fm < flips; ++fm)
          for (const auto& p : partials) {
            auto q = p;
            for (int i = 0; i < k; ++i) {
              int se = src[i], de = dst[bij[i]];
              bool flip = loop ? ((fm >> i) & 1) : swapped;
              q[2 * se] = 2 * de + (flip ? 1 : 0);
              q[2 * se + 1] = 2 * de + (flip ? 0 : 1);
            }
            next.push_back(std::move(q));
          }
      } while (std::next_permutation(bij.begin(), bij.end()));
      partials = std::move(next);
    }
    for (auto& p : partials) out.push_back({sigma, std::move(p)});
  });
  return out;
}

long long factorial_ll(int n) {
  long long v = 1;
  for (int i = 2; i <= n; ++i) v *= i;
  return v;
}

long long multiset_sym(const std::vector<int>& xs) {
  long long v = 1;
  for (std::size_t i = 0; i < xs.size();) {
    std::size_t j = i;
    while (j < xs.size() && xs[j] == xs[i]) ++j;
    v *= factorial_ll(static_cast<int>(j - i));
    i = j;
  }
  return v;
}

struct Decoration {
  std::vector<int> he;
  std::vector<int> open;
  std::vector<std::vector<int>> prim, dil;
  std::vector<int> alpha;
};

std::vector<int> flatten(const Decoration& d) {
  std::vector<int> out = d.he;
  out.insert(out.end(), d.open.begin(), d.open.end());
  for (std::size_t v = 0; v < d.prim.size(); ++v) {
    out.insert(out.end(), d.prim[v].begin(), d.prim[v].end());
    out.insert(out.end(), d.dil[v].begin(), d.dil[v].end());
    if (!d.alpha.empty()) out.push_back(d.alpha[v]);
  }
  return out;
}

Decoration apply(const CoreAut& a, const Decoration& d) {
  Decoration r = d;
  for (std::size_t h = 0; h < d.he.size(); ++h) r.he[a.hmap[h]] = d.he[h];
  for (std::size_t v = 0; v < d.prim.size(); ++v) {
    r.prim[a.vmap[v]] = d.prim[v];
    r.dil[a.vmap[v]] = d.dil[v];
    if (!d.alpha.empty()) r.alpha[a.vmap[v]] = d.alpha[v];
  }
  return r;
}

void decorate(const CoreGraph& g, int order, std::vector<DecoratedGraph>& out) {
  const int V = g.vertices();
  const int E = static_cast<int>(g.edges.size());
  const auto auts = core_automorphisms(g);
  std::vector<std::vector<int>> he_at(V), open_of(V);
  for (int e = 0; e < E; ++e) {
    he_at[g.edges[e][0]].push_back(2 * e);
    he_at[g.edges[e][1]].push_back(2 * e + 1);
  }
  for (std::size_t j = 0; j < g.open_at.size(); ++j) open_of[g.open_at[j]].push_back(static_cast<int>(j));

  Decoration d;
  d.he.assign(2 * E, 0);
  d.open.assign(g.open_at.size(), 0);
  d.prim.resize(V);
  d.dil.resize(V);
  for (int v = 0; v < V; ++v) {
    d.prim[v].assign(g.prim[v], 0);
    d.dil[v].assign(g.dil[v], 0);
  }

  auto emit = [&]() {
    auto key = flatten(d);
    long long stab = 0;
    for (const auto& a : auts) {
      auto img = flatten(apply(a, d));
      if (img < key) return;
      if (img == key) ++stab;
    }
    DecoratedGraph dg;
    dg.core = g;
    dg.edge_heights.resize(E);
    for (int e = 0; e < E; ++e) dg.edge_heights[e] = {d.he[2 * e], d.he[2 * e + 1]};
    dg.open_heights = d.open;
    dg.prim_heights = d.prim;
    dg.dil_heights = d.dil;
    dg.alpha = d.alpha;
    long long aut = stab;
    for (int v = 0; v < V; ++v) aut *= multiset_sym(d.prim[v]) * multiset_sym(d.dil[v]);
    dg.aut = aut;
    out.push_back(std::move(dg));
  };

  std::function<void(int)> vertex_rec;
  std::function<void()> markings = [&]() {
    if (order <= 0) {
      emit();
      return;
    }
    d.alpha.assign(V, 0);
    while (true) {
      emit();
      int i = V - 1;
      while (i >= 0 && ++d.alpha[i] == order) d.alpha[i--] = 0;
      if (i < 0) break;
    }
    d.alpha.clear();
  };
  vertex_rec = [&](int v) {
    if (v == V) {
      markings();
      return;
    }
    // slots: ordered half-edges and opens, then primary multiset, then dilaton multiset
    std::vector<int*> free;
    for (int h : he_at[v]) free.push_back(&d.he[h]);
    for (int j : open_of[v]) free.push_back(&d.open[j]);
    const int np = g.prim[v], nd = g.dil[v];
    std::function<void(std::size_t, int)> slot_rec = [&](std::size_t i, int rem) {
      const std::size_t nf = free.size();
      if (i < nf) {
        for (int x = 0; x <= rem; ++x) {
          *free[i] = x;
          slot_rec(i + 1, rem - x);
        }
        return;
      }
      std::size_t k = i - nf;
      if (k < static_cast<std::size_t>(np)) {
        int cap = k == 0 ? rem : std::min(rem, d.prim[v][k - 1]);
        for (int x = cap; x >= 0; --x) {
          d.prim[v][k] = x;
          slot_rec(i + 1, rem - x);
        }
        return;
      }
      k -= np;
      if (k < static_cast<std::size_t>(nd)) {
        int cap = k == 0 ? rem : std::min(rem, d.dil[v][k - 1]);
        for (int x = cap; x >= 2; --x) {
          d.dil[v][k] = x;
          slot_rec(i + 1, rem - x);
        }
        return;
      }
      if (rem == 0) vertex_rec(v + 1);
    };
    slot_rec(0, g.dim(v));
  };
  vertex_rec(0);
}

}  // namespace

std::vector<int> CoreGraph::canonical_key() const {
  std::vector<int> best;
  for_block_perms(*this, [&](const std::vector<int>& perm) {
    auto k = encode(*this, perm);
    if (best.empty() || k < best) best = k;
  });
  return best;
}

std::vector<CoreGraph> enumerate_shapes(int g, int n, int l, int dilatons) {
  CoreGraph root;
  root.genus = {g};
  root.open_at.assign(n, 0);
  root.prim = {l};
  root.dil = {dilatons};
  std::vector<CoreGraph> out;
  if (g < 0 || !feasible(root)) return out;
  std::set<std::vector<int>> seen;
  std::deque<CoreGraph> queue;
  CoreGraph c0 = canonicalize(root);
  seen.insert(c0.canonical_key());
  queue.push_back(c0);
  while (!queue.empty()) {
    CoreGraph c = std::move(queue.front());
    queue.pop_front();
    out.push_back(c);
    for (const auto& x : degenerations(c)) {
      CoreGraph cx = canonicalize(x);
      auto key = cx.canonical_key();
      if (seen.insert(key).second) queue.push_back(std::move(cx));
    }
  }
  return out;
}

std::vector<DecoratedGraph> enumerate_graphs(int g, int n, int l, int order) {
  std::vector<DecoratedGraph> out;
  if (g < 0 || n < 0 || l < 0) return out;
  const int base = 3 * g - 3 + n + l;
  for (int D = 0; D <= std::max(base, 0); ++D)
    for (const auto& shape : enumerate_shapes(g, n, l, D)) decorate(shape, order, out);
  return out;
}

std::vector<int> DecoratedGraph::vertex_heights(int v) const {
  std::vector<int> ks;
  for (std::size_t e = 0; e < core.edges.size(); ++e) {
    if (core.edges[e][0] == v) ks.push_back(edge_heights[e][0]);
    if (core.edges[e][1] == v) ks.push_back(edge_heights[e][1]);
  }
  for (std::size_t j = 0; j < core.open_at.size(); ++j)
    if (core.open_at[j] == v) ks.push_back(open_heights[j]);
  ks.insert(ks.end(), prim_heights[v].begin(), prim_heights[v].end());
  ks.insert(ks.end(), dil_heights[v].begin(), dil_heights[v].end());
  return ks;
}

int DecoratedGraph::max_height() const {
  int m = 0;
  for (int v = 0; v < core.vertices(); ++v)
    for (int k : vertex_heights(v)) m = std::max(m, k);
  return m;
}

std::string DecoratedGraph::describe() const {
  std::ostringstream os;
  os << "V[";
  for (int v = 0; v < core.vertices(); ++v) {
    if (v) os << ' ';
    os << 'g' << core.genus[v];
    if (!alpha.empty()) os << 'a' << alpha[v];
    os << " p(";
    for (int k : prim_heights[v]) os << k << ',';
    os << ") d(";
    for (int k : dil_heights[v]) os << k << ',';
    os << ')';
  }
  os << "] E[";
  for (std::size_t e = 0; e < core.edges.size(); ++e)
    os << core.edges[e][0] << '-' << core.edges[e][1] << ':' << edge_heights[e][0] << '/' << edge_heights[e][1]
       << ' ';
  os << "] O[";
  for (std::size_t j = 0; j < core.open_at.size(); ++j) os << core.open_at[j] << ':' << open_heights[j] << ' ';
  os << "] aut=" << aut;
  return os.str();
}

long long naive_aut(const DecoratedGraph& gr) {
  const CoreGraph& g = gr.core;
  const int V = g.vertices();
  struct Flag {
    int v, type, height, label, partner;
  };
  std::vector<Flag> flags;
  const int E = static_cast<int>(g.edges.size());
  for (int e = 0; e < E; ++e) {
    int a = static_cast<int>(flags.size());
    flags.push_back({g.edges[e][0], 0, gr.edge_heights[e][0], -1, a + 1});
    flags.push_back({g.edges[e][1], 0, gr.edge_heights[e][1], -1, a});
  }
  for (std::size_t j = 0; j < g.open_at.size(); ++j)
    flags.push_back({g.open_at[j], 1, gr.open_heights[j], static_cast<int>(j), -1});
  for (int v = 0; v < V; ++v) {
    for (int k : gr.prim_heights[v]) flags.push_back({v, 2, k, -1, -1});
    for (int k : gr.dil_heights[v]) flags.push_back({v, 3, k, -1, -1});
  }
  const int F = static_cast<int>(flags.size());
  std::vector<int> sigma(V);
  std::iota(sigma.begin(), sigma.end(), 0);
  long long total = 0;
  do {
    bool ok = true;
    for (int v = 0; v < V && ok; ++v) {
      ok = g.genus[v] == g.genus[sigma[v]];
      if (ok && !gr.alpha.empty()) ok = gr.alpha[v] == gr.alpha[sigma[v]];
    }
    if (!ok) continue;
    std::vector<int> map(F, -1);
    std::vector<char> used(F, 0);
    std::function<void(int)> rec = [&](int i) {
      if (i == F) {
        ++total;
        return;
      }
      const Flag& f = flags[i];
      for (int j = 0; j < F; ++j) {
        if (used[j]) continue;
        const Flag& t = flags[j];
        if (t.v != sigma[f.v] || t.type != f.type || t.height != f.height || t.label != f.label) continue;
        if (f.type == 0 && map[f.partner] >= 0 && map[f.partner] != t.partner) continue;
        map[i] = j;
        used[j] = 1;
        rec(i + 1);
        used[j] = 0;
        map[i] = -1;
      }
    };
    rec(0);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

}  // namespace ocgw
