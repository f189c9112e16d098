#include "doctest.h"

#include <algorithm>
#include <set>

#include "ocgw/graphs.hpp"
#include "ocgw/psi.hpp"

using namespace ocgw;

TEST_CASE("(g,n,l) = (1,1,0): three graphs") {
  auto gs = enumerate_graphs(1, 1, 0);
  REQUIRE(gs.size() == 3);
  int loop = 0, dil = 0, plain = 0;
  for (const auto& gr : gs) {
    const auto& c = gr.core;
    if (c.edges.size() == 1) {
      ++loop;
      CHECK(c.genus == std::vector<int>{0});
      CHECK(gr.edge_heights[0] == std::array<int, 2>{0, 0});
      CHECK(gr.open_heights == std::vector<int>{0});
      CHECK(gr.aut == 2);
    } else if (!gr.dil_heights[0].empty()) {
      ++dil;
      CHECK(gr.dil_heights[0] == std::vector<int>{2});
      CHECK(gr.open_heights == std::vector<int>{0});
      CHECK(gr.aut == 1);
    } else {
      ++plain;
      CHECK(gr.open_heights == std::vector<int>{1});
    }
  }
  CHECK(loop == 1);
  CHECK(dil == 1);
  CHECK(plain == 1);
}

TEST_CASE("(0,1,2): one graph with two interchangeable primary leaves") {
  auto gs = enumerate_graphs(0, 1, 2);
  REQUIRE(gs.size() == 1);
  CHECK(gs[0].core.vertices() == 1);
  CHECK(gs[0].prim_heights[0] == std::vector<int>{0, 0});
  CHECK(gs[0].aut == 2);
  CHECK(enumerate_graphs(0, 1, 0).empty());
}

TEST_CASE("structure over small sectors") {
  for (auto [g, n, l] : std::vector<std::array<int, 3>>{{0, 3, 0}, {0, 2, 1}, {1, 1, 1}, {1, 2, 0}, {2, 1, 0}, {0, 4, 0}}) {
    auto gs = enumerate_graphs(g, n, l);
    INFO("g=" << g << " n=" << n << " l=" << l);
    CHECK_FALSE(gs.empty());
    std::set<std::string> seen;
    for (const auto& gr : gs) {
      const auto& c = gr.core;
      CHECK(c.total_genus() == g);
      CHECK(static_cast<int>(c.open_at.size()) == n);
      for (int v = 0; v < c.vertices(); ++v) {
        CHECK(2 * c.genus[v] - 2 + c.valence(v) > 0);
        auto hs = gr.vertex_heights(v);
        int sum = 0;
        for (int h : hs) sum += h;
        CHECK(sum == c.dim(v));
        // pruning is lossless: the psi factor is nonzero on what is kept
        CHECK(psi_intersection(c.genus[v], hs) != 0);
        for (int h : gr.dil_heights[v]) CHECK(h >= 2);
      }
      if (c.vertices() <= 4) CHECK(naive_aut(gr) == gr.aut);
      seen.insert(gr.describe());
    }
    CHECK(seen.size() == gs.size());
  }
}

TEST_CASE("markings multiply the list") {
  auto plain = enumerate_graphs(0, 3, 0);
  auto marked = enumerate_graphs(0, 3, 0, 3);
  REQUIRE(plain.size() == 1);
  CHECK(marked.size() == 3);
  for (const auto& gr : marked) CHECK(gr.alpha.size() == 1);
}
