#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rtlab/census.hpp"
#include "rtlab/symmetrize.hpp"

using namespace rtlab;

namespace {

// Blow-up of a random class graph (weights 1/2 or 1) with equal class sizes;
// a post-S1 graph by construction.
WeightedGraph equal_class_blowup(int m, int size, std::mt19937_64& rng, std::vector<std::vector<int>>& classes) {
  std::uniform_int_distribution<int> w(1, 2);
  std::vector<std::vector<int>> cw(m, std::vector<int>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) cw[a][b] = cw[b][a] = w(rng);
  WeightedGraph g(m * size);
  classes.assign(m, {});
  for (int v = 0; v < m * size; ++v) classes[v / size].push_back(v);
  for (int u = 0; u < m * size; ++u)
    for (int v = u + 1; v < m * size; ++v) g.set_halves(u, v, cw[u / size][v / size]);
  return g;
}

bool rows_equal_off(const WeightedGraph& g, int i, int j) {
  for (int k = 0; k < g.n(); ++k)
    if (k != i && k != j && g.halves(i, k) != g.halves(j, k)) return false;
  return true;
}

}  // namespace

TEST_SUITE("symmetrize") {
  TEST_CASE("s1_step copies a row and shifts T by T_i - T_j") {
    std::mt19937_64 rng(1);
    int done = 0;
    for (int trial = 0; trial < 2000 && done < 500; ++trial) {
      WeightedGraph g = oracle::random_weighted(3 + trial % 6, rng);
      std::uniform_int_distribution<int> pick(0, g.n() - 1);
      int i = pick(rng), j = pick(rng);
      if (i == j) continue;
      if (g.halves(i, j) != 0) {
        CHECK_THROWS_AS(s1_step(g, i, j), Error);
        continue;
      }
      WeightedGraph h = s1_step(g, i, j);
      REQUIRE(rows_equal_off(h, i, j));
      REQUIRE(h.halves(i, j) == 0);
      int64_t delta = oracle::triangle_eighths(h) - oracle::triangle_eighths(g);
      REQUIRE(delta == vertex_triangle_eighths(g, i) - vertex_triangle_eighths(g, j));
      if (vertex_triangle_eighths(g, i) >= vertex_triangle_eighths(g, j)) REQUIRE(delta >= 0);
      REQUIRE(oracle::weighted_clique_number(h) <= oracle::weighted_clique_number(g));
      ++done;
    }
    CHECK(done == 500);
  }

  TEST_CASE("s1_step on twins is a no-op") {
    WeightedGraph g(4);
    g.set_halves(0, 2, 2);
    g.set_halves(1, 2, 2);
    g.set_halves(0, 3, 1);
    g.set_halves(1, 3, 1);
    CHECK(s1_step(g, 0, 1) == g);
  }

  TEST_CASE("run_s1 on extreme inputs") {
    auto full = run_s1(WeightedGraph::uniform(5, 2));
    CHECK(full.graph == WeightedGraph::uniform(5, 2));
    CHECK(full.classes.size() == 5);
    auto zero = run_s1(WeightedGraph::uniform(5, 0));
    CHECK(zero.graph == WeightedGraph::uniform(5, 0));
    CHECK(zero.classes.size() == 1);
  }

  TEST_CASE("run_s1 yields constant weights between classes") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; ++trial) {
      WeightedGraph g = oracle::random_weighted(7, rng);
      auto res = run_s1(g);
      std::vector<int> cls(7, -1);
      for (std::size_t c = 0; c < res.classes.size(); ++c)
        for (int v : res.classes[c]) cls[v] = static_cast<int>(c);
      for (int u = 0; u < 7; ++u)
        for (int v = 0; v < 7; ++v) {
          if (u == v) continue;
          REQUIRE((res.graph.halves(u, v) == 0) == (cls[u] == cls[v]));
          for (int x = 0; x < 7; ++x)
            if (cls[x] == cls[u] && x != v && u != v && x != u && cls[v] != cls[u])
              REQUIRE(res.graph.halves(u, v) == res.graph.halves(x, v));
        }
      REQUIRE(res.log.size() <= 49);
      for (const auto& r : res.log) {
        REQUIRE(r.t_after >= r.t_before);
        REQUIRE(r.wcn_after <= r.wcn_before);
      }
      REQUIRE(oracle::triangle_eighths(res.graph) >= oracle::triangle_eighths(g));
    }
  }

  TEST_CASE("s2_step on matching classes is a no-op") {
    WeightedGraph g(3);
    g.set_halves(0, 1, 1);
    g.set_halves(0, 2, 2);
    g.set_halves(1, 2, 2);
    std::vector<std::vector<int>> cl = {{0}, {1}, {2}};
    CHECK(s2_step(g, cl, 0, 1) == g);
    CHECK_THROWS_AS(s2_step(g, cl, 0, 2), Error);
  }

  TEST_CASE("copying one class onto the other does not lose on average") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<std::vector<int>> cl;
      WeightedGraph g = equal_class_blowup(3 + trial % 4, 1 + trial % 3, rng, cl);
      const int m = static_cast<int>(cl.size());
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          if (g.halves(cl[i][0], cl[j][0]) != 1) continue;
          int64_t gi = oracle::triangle_eighths(s2_step(g, cl, i, j));
          int64_t gj = oracle::triangle_eighths(s2_step(g, cl, j, i));
          REQUIRE(gi + gj >= 2 * oracle::triangle_eighths(g));
        }
    }
  }

  TEST_CASE("extremal instance is fixed by class copies") {
    BlowupStructure s = canonical_structure(12, 8);
    WeightedGraph g = s.blow_up();
    std::vector<std::vector<int>> cl;
    int v = 0;
    for (int size : s.a_sizes) {
      cl.emplace_back();
      for (int x = 0; x < size; ++x) cl.back().push_back(v++);
    }
    int64_t t = triangle_sum_eighths(g);
    CHECK(triangle_sum_eighths(s2_step(g, cl, 0, 1)) == t);
    CHECK(triangle_sum_eighths(s2_step(g, cl, 1, 0)) == t);
  }

  TEST_CASE("run_s2 groups classes at weight 1/2") {
    WeightedGraph one = WeightedGraph::uniform(2, 2);
    auto a = run_s2(one, {{0}, {1}});
    CHECK(a.b_classes.size() == 2);
    WeightedGraph half = WeightedGraph::uniform(2, 1);
    auto b = run_s2(half, {{0}, {1}});
    CHECK(b.b_classes.size() == 1);
    CHECK_THROWS_AS(run_s2(WeightedGraph::uniform(3, 1), {{0, 1}, {2}}), Error);
  }

  TEST_CASE("after S1 and S2 the weighted clique number is m + m'") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 200; ++trial) {
      WeightedGraph g = oracle::random_weighted(3 + trial % 5, rng);
      auto s1 = run_s1(g);
      auto s2 = run_s2(s1.graph, s1.classes);
      REQUIRE(is_normal_form(s2.graph));
      auto st = structure_of(s2.graph);
      REQUIRE(st.m() == static_cast<int>(s2.a_classes.size()));
      REQUIRE(st.m_prime() == static_cast<int>(s2.b_classes.size()));
      REQUIRE(oracle::weighted_clique_number(s2.graph) == st.m() + st.m_prime());
      for (const auto& r : s2.log) REQUIRE(r.wcn_after <= r.wcn_before);
      REQUIRE(s2.log.size() <= static_cast<std::size_t>(st.m() * st.m()) + s1.classes.size());
    }
  }

  TEST_CASE("structure_of and blow_up round trip") {
    BlowupStructure s{{2, 3, 1, 4}, {0, 0, 1, 2}};
    s.canonicalize();
    WeightedGraph g = s.blow_up();
    CHECK(g.n() == 10);
    auto back = structure_of(g);
    CHECK(back.a_sizes == s.a_sizes);
    CHECK(back.b_of == s.b_of);
    CHECK(s.triangle_eighths() == oracle::triangle_eighths(g));
    CHECK(s.edge_halves() == edge_sum_halves(g));
    CHECK(s.weighted_clique_number() == 4 + 3);
    WeightedGraph bad = WeightedGraph::uniform(3, 2);
    bad.set_halves(0, 1, 0);
    bad.set_halves(1, 2, 0);
    CHECK_FALSE(is_normal_form(bad));
    CHECK_THROWS_AS(structure_of(bad), Error);
  }

  TEST_CASE("case 1: five classes in one B split three ways") {
    BlowupStructure s{{6, 6, 6, 6, 6}, {0, 0, 0, 0, 0}};
    auto res = apply_splits(s, 7);
    REQUIRE_FALSE(res.log.empty());
    CHECK(res.log[0].rule == "case1");
    CHECK(res.log[0].accepted);
    CHECK(res.log[0].t_u_after > res.log[0].t_u_before);
    CHECK(res.structure.weighted_clique_number() <= 6);
  }

  TEST_CASE("case 3: three classes split two ways below 12n/13") {
    BlowupStructure s{{4, 4, 4, 10}, {0, 0, 0, 1}};
    auto res = apply_splits(s, 7);
    REQUIRE_FALSE(res.log.empty());
    CHECK(res.log[0].rule == "case3-split");
    CHECK(res.log[0].accepted);
    CHECK(res.log[0].wcn_after == res.log[0].wcn_before);
  }

  TEST_CASE("claim 2: two doubled B's merge three ways") {
    BlowupStructure s{{2, 2, 2, 2}, {0, 0, 1, 1}};
    auto res = apply_splits(s, 7);
    REQUIRE_FALSE(res.log.empty());
    const auto& r = res.log[0];
    CHECK(r.rule == "claim2");
    CHECK(r.u == 8);
    CHECK(r.e_u_after >= r.e_u_before);
    CHECK(r.t_u_after >= r.t_u_before);
    CHECK(r.accepted);
    CHECK_THROWS_AS(apply_splits(s, 6), Error);
  }

  TEST_CASE("accepted splits never raise the weighted clique number") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      std::uniform_int_distribution<int> mdist(1, 7), size(1, 6);
      int m = mdist(rng);
      BlowupStructure s;
      for (int i = 0; i < m; ++i) {
        s.a_sizes.push_back(size(rng));
        s.b_of.push_back(std::uniform_int_distribution<int>(0, i)(rng));
      }
      s.canonicalize();
      auto res = apply_splits(s, s.weighted_clique_number() + 1);
      for (const auto& r : res.log)
        if (r.accepted) {
          REQUIRE(r.wcn_after <= r.wcn_before);
          REQUIRE(r.t_after >= r.t_before);
        }
      REQUIRE(res.structure.n() == s.n());
    }
  }

  TEST_CASE("triangle maximum for odd t is the balanced blow-up") {
    auto r = maximize_weighted_triangles(9, 7);
    CHECK(r.value() == Rational(27));
    CHECK(r.structure.a_sizes == std::vector<int>{3, 3, 3});
    CHECK_THROWS_AS(maximize_weighted_triangles(9, 3), Error);
  }

  TEST_CASE("triangle maximum for t = 6 approaches n^3/54") {
    auto r = maximize_weighted_triangles(60, 6);
    CHECK(std::fabs(to_double(r.value()) / (60.0 * 60 * 60) - 1.0 / 54) < 1e-3);
  }

  TEST_CASE("triangle maximum matches the exhaustive oracle up to n = 5") {
    for (int n = 1; n <= 5; ++n)
      for (int t = 4; t <= 7; ++t) {
        CAPTURE(n);
        CAPTURE(t);
        CHECK(maximize_weighted_triangles(n, t).value() == weighted_bound_oracle(n, t, Quantity::Triangles).maximum);
      }
  }
}
