#include <doctest.h>

#include <cmath>

#include "rtlab/constructions.hpp"

using namespace rtlab;

namespace {

int64_t pair_products(const std::vector<int>& sizes) {
  int64_t out = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    for (std::size_t j = i + 1; j < sizes.size(); ++j) out += int64_t{sizes[i]} * sizes[j];
  return out;
}

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("Turan graphs") {
    Graph t93 = build_turan(9, 3);
    CHECK(t93.edge_count() == 27);
    CHECK(is_clique_free(t93, 4).clique_free);
    CHECK(build_turan(4, 2).edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(build_turan(4, 2).degree(v) == 2);
    CHECK(build_turan(10, 4).edge_count() == pair_products({3, 3, 2, 2}));
  }

  TEST_CASE("triangle-free process") {
    auto res = build_gamma(100, 7);
    CHECK(count_cliques(res.graph, 3) == 0);
    // Saturation: every non-edge closes a triangle.
    for (int u = 0; u < 100; ++u)
      for (int v = u + 1; v < 100; ++v) {
        if (res.graph.adjacent(u, v)) continue;
        REQUIRE_FALSE((res.graph.neighbors(u) & res.graph.neighbors(v)).empty());
      }
    CHECK(build_gamma(60, 3).graph == build_gamma(60, 3).graph);
  }

  TEST_CASE("triangle-free process has small greedy independence bound") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
      auto res = build_gamma(400, seed);
      CHECK(count_cliques(res.graph, 3) == 0);
      CHECK(res.alpha_lower <= 0.35 * 400);
    }
  }

  TEST_CASE("H(n,k) is K_k-free") {
    for (int n : {30, 60})
      for (int k = 3; k <= 9; ++k) {
        auto plan = optimize_plan(n, k, Objective::Edges);
        auto pg = build_h_n_k(n, k, plan, 2);
        CAPTURE(n);
        CAPTURE(k);
        REQUIRE(is_clique_free(pg.graph, k).clique_free);
        int covered = 0;
        for (const auto& p : pg.parts) covered += p.count();
        CHECK(covered == n);
      }
  }

  TEST_CASE("odd k adds inner edges on top of the Turan graph") {
    for (int k : {5, 7, 9}) {
      auto pg = build_h_n_k(90, k, optimize_plan(90, k, Objective::Edges), 1);
      CHECK(pg.graph.edge_count() >= build_turan(90, k / 2).edge_count());
      CHECK(pg.graph.edge_count() == build_turan(90, k / 2).edge_count() + pg.gamma_edges);
    }
  }

  TEST_CASE("H(n,5) balanced has about n^2/4 edges") {
    auto pg = build_h_n_k(100, 5, optimize_plan(100, 5, Objective::Edges), 1);
    CHECK(pg.graph.edge_count() == 2500 + pg.gamma_edges);
  }

  TEST_CASE("H(210,6) edge density is near b_6") {
    auto pg = build_h_n_k(210, 6, optimize_plan(210, 6, Objective::Edges), 1);
    double density = pg.graph.edge_count() / (210.0 * 210.0);
    CHECK(std::fabs(density - 2.0 / 7) < 0.03);
    CHECK(is_clique_free(pg.graph, 6).clique_free);
  }

  TEST_CASE("H(90,7) has about n^3/27 triangles") {
    auto pg = build_h_n_k(90, 7, optimize_plan(90, 7, Objective::Triangles), 1);
    double ratio = count_cliques(pg.graph, 3) / (90.0 * 90 * 90);
    // Balanced thirds give exactly 1/27 before the triangle-free copies
    // contribute their edge-times-other-part triangles.
    CHECK(ratio >= 1.0 / 27);
    CHECK(ratio < 2.0 / 27);
  }

  TEST_CASE("even-k plans keep |V1| = |V2| and sum to n") {
    for (int k : {4, 6, 8})
      for (int n : {30, 90, 210})
        for (auto obj : {Objective::Edges, Objective::Triangles}) {
          auto plan = optimize_plan(n, k, obj);
          CHECK(plan.total() == n);
          CHECK(plan.sizes[0] == plan.sizes[1]);
          CHECK(plan.x >= 0);
          CHECK(plan.x <= 1);
        }
    CHECK_THROWS(build_h_n_k(30, 6, PartSizePlan{{10, 8, 12}}, 1));
    CHECK_THROWS(build_h_n_k(30, 6, PartSizePlan{{10, 10}}, 1));
  }

  TEST_CASE("triangle objective for k = 6 peaks at x = 2/3") {
    // Grid oracle for x^2 (1 - x) / 8.
    double best_x = 0, best = -1;
    for (int i = 0; i <= 100000; ++i) {
      double x = i / 100000.0, v = x * x * (1 - x) / 8;
      if (v > best) {
        best = v;
        best_x = x;
      }
    }
    auto plan = optimize_plan(600, 6, Objective::Triangles);
    CHECK(std::fabs(plan.x_continuous - best_x) < 1e-4);
    CHECK(std::fabs(plan.value - 1.0 / 54) < 1e-9);
    CHECK(std::fabs(plan.x - 2.0 / 3) < 0.01);
  }

  TEST_CASE("odd k plans are balanced") {
    auto p7 = optimize_plan(90, 7, Objective::Triangles);
    CHECK(p7.sizes == std::vector<int>{30, 30, 30});
    auto p5 = optimize_plan(90, 5, Objective::Edges);
    CHECK(p5.sizes == std::vector<int>{45, 45});
  }

  TEST_CASE("Construction 2") {
    Graph h = empty_graph(3);
    auto pg = build_h_n_s_t(150, 3, 5, h, balanced_plan(150, 3), 1);
    CHECK(pg.be_blocks.size() == 3);
    CHECK(pg.gamma_parts.empty());
    CHECK(is_clique_free(pg.graph, 5).clique_free);
    CHECK(default_aux_graph(3, 5) == empty_graph(3));

    Graph one_edge = empty_graph(3);
    one_edge.add_edge(0, 1);
    CHECK_THROWS(build_h_n_s_t(150, 3, 5, one_edge, balanced_plan(150, 3), 1));
    CHECK_THROWS(build_h_n_s_t(150, 3, 4, h, balanced_plan(150, 3), 1));
    CHECK_THROWS(build_h_n_s_t(150, 3, 6, h, balanced_plan(150, 3), 1));
  }

  TEST_CASE("Construction 2 with s = 4") {
    CHECK_THROWS(default_aux_graph(4, 5));
    for (int t = 6; t <= 7; ++t) {
      Graph h = default_aux_graph(4, t);
      auto pg = build_h_n_s_t(80, 4, t, h, balanced_plan(80, 4), 3);
      CAPTURE(t);
      CHECK(is_clique_free(pg.graph, t).clique_free);
    }
  }

  TEST_CASE("Construction 2 triangle ratio") {
    auto plan = balanced_plan(150, 3);
    plan.be_epsilon = 0.1;
    auto pg = build_h_n_s_t(150, 3, 5, empty_graph(3), plan, 1);
    double ratio = count_cliques(pg.graph, 3) / std::pow(50.0, 3);
    CHECK(ratio >= 0.06);
    CHECK(ratio <= 0.19);
  }

  TEST_CASE("unit-interval maximizer") {
    auto r = maximize_unit_interval([](double x) { return -(x - 0.3) * (x - 0.3); });
    CHECK(std::fabs(r.x - 0.3) < 1e-9);
  }
}
