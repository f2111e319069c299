#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rtlab/weighted.hpp"

using namespace rtlab;

TEST_SUITE("weighted") {
  TEST_CASE("edge sums") {
    CHECK(weighted_edge_sum(WeightedGraph::uniform(4, 1)) == Rational(3));
    CHECK(weighted_edge_sum(WeightedGraph::uniform(4, 0)) == Rational(0));
    CHECK(weighted_edge_sum(WeightedGraph::uniform(5, 2)) == Rational(10));
  }

  TEST_CASE("triangle sums") {
    CHECK(weighted_triangle_sum(WeightedGraph::uniform(3, 1)) == Rational(1, 8));
    CHECK(weighted_triangle_sum(WeightedGraph::uniform(7, 2)) == Rational(35));
    // Complete 3-partite blow-up with parts 2, 3, 4.
    std::vector<int> part = {0, 0, 1, 1, 1, 2, 2, 2, 2};
    WeightedGraph g(9);
    for (int u = 0; u < 9; ++u)
      for (int v = u + 1; v < 9; ++v) g.set_halves(u, v, part[u] == part[v] ? 0 : 2);
    CHECK(weighted_triangle_sum(g) == Rational(24));

    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
      WeightedGraph r = oracle::random_weighted(2 + trial % 9, rng);
      REQUIRE(triangle_sum_eighths(r) == oracle::triangle_eighths(r));
      REQUIRE(triangle_sum_eighths_serial(r) == oracle::triangle_eighths(r));
      int64_t per_vertex = 0;
      for (int v = 0; v < r.n(); ++v) per_vertex += vertex_triangle_eighths(r, v);
      REQUIRE(per_vertex == 3 * oracle::triangle_eighths(r));
    }
  }

  TEST_CASE("pair triangle sums") {
    WeightedGraph g = WeightedGraph::uniform(5, 2);
    CHECK(pair_triangle_eighths(g, 0, 1) == 3 * 8);
    g.set_halves(0, 2, 1);
    CHECK(pair_triangle_eighths(g, 0, 1) == 2 * 8 + 8 / 2);
  }

  TEST_CASE("weighted clique examples") {
    for (int m = 1; m <= 6; ++m) {
      CHECK(weighted_clique_number(WeightedGraph::uniform(m, 2)) == 2 * m);
      // Singletons count: X = {v}, Y = V.
      CHECK(weighted_clique_number(WeightedGraph::uniform(m, 1)) == m + 1);
    }
    CHECK(weighted_clique_number(WeightedGraph::uniform(3, 0)) == 2);
    CHECK(oracle::weighted_clique_number(WeightedGraph::uniform(3, 0)) == 2);

    auto full = find_weighted_clique(WeightedGraph::uniform(4, 2), 8);
    REQUIRE(full);
    CHECK(full->x_set.count() == 4);
    CHECK(full->y_set.count() == 4);

    auto half = WeightedGraph::uniform(5, 1);
    auto y_only = find_weighted_clique(half, 5);
    REQUIRE(y_only);
    CHECK(is_weighted_clique(half, *y_only));
    CHECK_FALSE(find_weighted_clique(half, 7));

    WeightedGraph g = WeightedGraph::uniform(5, 1);
    g.set_halves(0, 1, 2);
    auto c = find_weighted_clique(g, 7);
    REQUIRE(c);
    CHECK(c->x_set.to_vector() == std::vector<int>{0, 1});
    CHECK(c->y_set.count() == 5);
    CHECK_FALSE(find_weighted_clique(g, 8));
    CHECK_THROWS(find_weighted_clique(g, 0));
    CHECK_THROWS_AS(weighted_clique_number(WeightedGraph(65)), Error);
  }

  TEST_CASE("weighted clique search matches (X,Y) enumeration") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 1000; ++trial) {
      WeightedGraph g = oracle::random_weighted(1 + trial % 7, rng);
      int w = oracle::weighted_clique_number(g);
      REQUIRE(weighted_clique_number(g) == w);
      auto best = max_weighted_clique(g);
      REQUIRE(best.size() == w);
      REQUIRE(is_weighted_clique(g, best));
      int ell = trial % (2 * g.n() + 2);
      auto found = find_weighted_clique(g, ell == 0 ? 1 : ell);
      REQUIRE(found.has_value() == oracle::has_weighted_clique(g, ell == 0 ? 1 : ell));
      if (found) {
        REQUIRE(found->size() == (ell == 0 ? 1 : ell));
        REQUIRE(is_weighted_clique(g, *found));
      }
    }
  }

  TEST_CASE("raising a weight never lowers e, T or the weighted clique number") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
      WeightedGraph g = oracle::random_weighted(3 + trial % 5, rng);
      std::uniform_int_distribution<int> pick(0, g.n() - 1);
      int u = pick(rng), v = pick(rng);
      if (u == v || g.halves(u, v) == 2) continue;
      WeightedGraph h = g;
      h.set_halves(u, v, g.halves(u, v) + 1);
      REQUIRE(edge_sum_halves(h) > edge_sum_halves(g));
      REQUIRE(triangle_sum_eighths(h) >= triangle_sum_eighths(g));
      REQUIRE(weighted_clique_number(h) >= weighted_clique_number(g));
    }
  }

  TEST_CASE("intersection") {
    std::mt19937_64 rng(4);
    WeightedGraph g = oracle::random_weighted(6, rng), h = oracle::random_weighted(6, rng);
    CHECK(intersect(g, g) == g);
    CHECK(intersect(g, WeightedGraph::uniform(6, 0)) == WeightedGraph::uniform(6, 0));
    CHECK(intersect(WeightedGraph::uniform(5, 2), WeightedGraph::uniform(5, 1)) == WeightedGraph::uniform(5, 1));
    auto m = intersect(g, h);
    CHECK(triangle_sum_eighths(m) <= std::min(triangle_sum_eighths(g), triangle_sum_eighths(h)));
    CHECK_THROWS(intersect(g, WeightedGraph(5)));
  }

  TEST_CASE("derived graphs") {
    WeightedGraph g(3);
    g.set_halves(0, 1, 1);
    g.set_halves(1, 2, 2);
    CHECK(g.half_graph().edge_count() == 2);
    CHECK(g.one_graph().edge_count() == 1);
    CHECK(g.weight(0, 1) == Rational(1, 2));
    CHECK_THROWS(g.set_halves(0, 1, 3));
    CHECK_THROWS(g.set_halves(1, 1, 1));
  }

  TEST_CASE("text format") {
    std::mt19937_64 rng(5);
    WeightedGraph g = oracle::random_weighted(6, rng);
    CHECK(parse_weighted_graph(to_text(g)) == g);
    WeightedGraph p = parse_weighted_graph("3\n0 1 .5\n1 2 1.0\n");
    CHECK(p.halves(0, 1) == 1);
    CHECK(p.halves(1, 2) == 2);
    CHECK(p.halves(0, 2) == 0);
    CHECK_THROWS(parse_weighted_graph("3\n0 1 0.7\n"));
    CHECK_THROWS(parse_weighted_graph("3\n0 3 1\n"));
  }
}
