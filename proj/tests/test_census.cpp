#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "rtlab/census.hpp"
#include "rtlab/constructions.hpp"
#include "rtlab/formulas.hpp"

using namespace rtlab;

namespace {

EdgeColoring monochromatic(const Graph& g, int r, int c) {
  EdgeColoring col;
  col.r = r;
  col.color.assign(g.edge_count(), c);
  return col;
}

// All labelled graphs on n vertices, by edge mask.
Graph graph_from_mask(int n, uint32_t mask) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_SUITE("census") {
  TEST_CASE("census examples") {
    CHECK(count_valid_colorings(complete_graph(3), 2, 3).valid == 6);
    CHECK(count_valid_colorings(complete_graph(4), 2, 3).valid == 18);
    CHECK(oracle::census(complete_graph(4), 2, 3) == 18);
    CHECK(count_valid_colorings(complete_graph(4), 2, 3, CensusMode::InclusionExclusion).valid == 18);
    auto c5 = count_valid_colorings(cycle_graph(5), 3, 3);
    CHECK(c5.valid == 243);
    CHECK(c5.total == 243);
    CHECK(c5.fraction == doctest::Approx(1.0));
  }

  TEST_CASE("exhaustive, serial, inclusion-exclusion and listing agree") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 60; ++trial) {
      Graph g = oracle::random_graph(4 + trial % 3, 0.7, rng);
      int r = 2 + trial % 2, k = 3 + (trial % 5 == 0);
      if (census_log2_space(g, r) > 20) continue;
      uint64_t want = oracle::census(g, r, k);
      REQUIRE(count_valid_colorings(g, r, k).valid == want);
      REQUIRE(count_valid_colorings_serial(g, r, k) == want);
      REQUIRE(count_valid_colorings(g, r, k, CensusMode::InclusionExclusion).valid == want);
    }
  }

  TEST_CASE("K5 count by two methods") {
    auto ex = count_valid_colorings(complete_graph(5), 2, 3);
    auto ie = count_valid_colorings(complete_graph(5), 2, 3, CensusMode::InclusionExclusion);
    CHECK(ex.valid == ie.valid);
    CHECK(ex.valid == oracle::census(complete_graph(5), 2, 3));
    // Every 2-coloring of K6 has a monochromatic triangle.
    CHECK(count_valid_colorings(complete_graph(6), 2, 3).valid == 0);
  }

  TEST_CASE("budget and sampling") {
    CHECK_THROWS_AS(count_valid_colorings(complete_graph(10), 2, 3), Error);
    try {
      count_valid_colorings(complete_graph(10), 2, 3);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Budget);
    }
    auto s = count_valid_colorings(complete_graph(5), 2, 3, CensusMode::Sample, 20000, 3);
    CHECK_FALSE(s.exact);
    double exact = to_double(Rational(oracle::census(complete_graph(5), 2, 3), 1024));
    CHECK(std::fabs(s.fraction - exact) < 0.02);
  }

  TEST_CASE("r^e exactly when K_k-free, over all graphs on up to 5 vertices") {
    for (int n = 1; n <= 5; ++n) {
      const int pairs = n * (n - 1) / 2;
      for (uint32_t mask = 0; mask < (1U << pairs); ++mask) {
        Graph g = graph_from_mask(n, mask);
        for (int k : {3, 4}) {
          auto res = count_valid_colorings(g, 2, k);
          REQUIRE((res.valid == res.total) == is_clique_free(g, k).clique_free);
        }
      }
    }
  }

  TEST_CASE("adding an edge never raises the valid fraction") {
    const int n = 5, pairs = 10;
    for (uint32_t mask = 0; mask < (1U << pairs); mask += 7) {
      Graph g = graph_from_mask(n, mask);
      auto base = count_valid_colorings(g, 2, 3);
      for (int bit = 0; bit < pairs; ++bit) {
        if (mask >> bit & 1) continue;
        auto more = count_valid_colorings(graph_from_mask(n, mask | 1U << bit), 2, 3);
        // valid' / 2^{e+1} <= valid / 2^e
        REQUIRE(more.valid <= 2 * base.valid);
      }
    }
  }

  TEST_CASE("census maximum over small graphs") {
    auto m4 = max_census_over_graphs(4, 2, 3);
    CHECK(m4.valid >= 16);
    CHECK(m4.valid == 18);
    auto m5 = max_census_over_graphs(5, 2, 3);
    CHECK(m5.valid >= 64);
    auto m5a = max_census_over_graphs(5, 2, 3, 2);
    CHECK(m5a.valid <= m5.valid);
    CHECK(independence_number(m5a.graph).lower <= 2);
    // Labelled brute force over all 2^10 graphs on 5 vertices.
    uint64_t best = 0;
    for (uint32_t mask = 0; mask < 1024; ++mask) best = std::max(best, oracle::census(graph_from_mask(5, mask), 2, 3));
    CHECK(m5.valid == best);
  }

  TEST_CASE("isomorphism classes") {
    CHECK(all_graphs_up_to_isomorphism(3).size() == 4);
    CHECK(all_graphs_up_to_isomorphism(4).size() == 11);
    CHECK(all_graphs_up_to_isomorphism(5).size() == 34);
    CHECK(all_graphs_up_to_isomorphism(6).size() == 156);
    Graph p = path_graph(4);
    Graph q(4);
    q.add_edge(2, 0);
    q.add_edge(0, 3);
    q.add_edge(3, 1);
    CHECK(canonical_graph(p) == canonical_graph(q));
    CHECK_FALSE(canonical_graph(p) == canonical_graph(cycle_graph(4)));
  }

  TEST_CASE("coloring input validation") {
    Graph g = complete_graph(3);
    CHECK_NOTHROW(coloring_from_triples(g, 2, {{0, 1, 1}, {2, 0, 2}, {1, 2, 1}}));
    CHECK_THROWS(coloring_from_triples(g, 2, {{0, 1, 1}, {0, 2, 2}}));
    CHECK_THROWS(coloring_from_triples(g, 2, {{0, 1, 1}, {0, 2, 3}, {1, 2, 1}}));
    CHECK_THROWS(coloring_from_triples(path_graph(3), 2, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}));
  }

  TEST_CASE("partition: monochromatic coloring keeps everything in C1") {
    Graph g = complete_graph(10);
    auto res = partition_by_colors(g, monochromatic(g, 2, 1), 0.5);
    CHECK(res.parts[0].count() == 10);
    CHECK(res.parts[1].empty());
    CHECK(res.rounds == 0);
    CHECK(res.ok());
  }

  TEST_CASE("partition: color 2 everywhere moves everything to C2") {
    Graph g = complete_graph(10);
    auto res = partition_by_colors(g, monochromatic(g, 2, 2), 0.5);
    CHECK(res.parts[0].empty());
    CHECK(res.parts[1].count() == 10);
    CHECK(res.rounds == 1);
    CHECK(res.ok());
  }

  TEST_CASE("partition: precondition is enforced") {
    Graph g = turan_graph(20, 2);  // alpha = 10
    std::vector<std::array<int, 3>> triples;
    for (auto [u, v] : g.edges()) triples.push_back({u, v, 1});
    auto col = coloring_from_triples(g, 2, triples);
    CHECK_THROWS_AS(partition_by_colors(g, col, 0.2), Error);
    CHECK(partition_alpha_fraction(2, 0.2) == doctest::Approx(0.04));
    CHECK(partition_alpha_fraction(3, 0.5) == doctest::Approx(0.03125));
  }

  TEST_CASE("partition: planted blow-up instances") {
    const int n = 40;
    Graph g = complete_graph(n);
    for (uint64_t seed = 1; seed <= 10; ++seed) {
      std::mt19937_64 rng(seed);
      std::vector<int> grp(n);
      for (int& x : grp) x = std::uniform_int_distribution<int>(0, 11)(rng);
      std::vector<std::array<int, 3>> triples;
      for (auto [u, v] : g.edges()) triples.push_back({u, v, grp[u] == grp[v] ? 1 : 2});
      auto col = coloring_from_triples(g, 2, triples);
      auto res = partition_by_colors(g, col, 0.2);
      REQUIRE(res.rounds <= 5);
      REQUIRE((res.parts[0] & res.parts[1]).empty());
      REQUIRE((res.parts[0] | res.parts[1]).count() == n);
      for (int c = 0; c < 2; ++c) {
        Graph gc = color_graph(g, col, c + 1);
        REQUIRE(oracle::alpha(gc.induced(res.parts[c])) <= 8);
      }
    }
  }

  TEST_CASE("partition with three colors") {
    const int n = 30;
    Graph g = complete_graph(n);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> c3(1, 3);
    std::vector<std::array<int, 3>> triples;
    for (auto [u, v] : g.edges()) triples.push_back({u, v, c3(rng)});
    auto col = coloring_from_triples(g, 3, triples);
    const double c = 0.7;  // c^5 n = 5.04 >= alpha(K_n) = 1
    auto res = partition_by_colors(g, col, c);
    CHECK(res.ok());
    CHECK((res.parts[0] | res.parts[1] | res.parts[2]).count() == n);
  }

  TEST_CASE("lower-bound family (t=1, i=1) on H(20,5)") {
    auto h = build_h_n_k(20, 5, optimize_plan(20, 5, Objective::Edges), 1);
    auto fam = generate_lower_bound_family(1, 1, h);
    CHECK(fam.forbidden == 4);
    CHECK(fam.free_edges == 100);
    CHECK(fam.size() == BigInt(1) << 100);
    CHECK(fam.log2_size() == doctest::Approx(100));
    auto v = validate_family(h.graph, fam, 1000, 1);
    CHECK(v.failures == 0);
    CHECK(v.max_mono_clique <= 3);
    CHECK_THROWS_AS(generate_lower_bound_family(1, 3, h), Error);
  }

  TEST_CASE("lower-bound family (t=1, i=2) on H(40,6)") {
    auto h = build_h_n_k(40, 6, optimize_plan(40, 6, Objective::Edges), 1);
    auto fam = generate_lower_bound_family(1, 2, h);
    CHECK(fam.forbidden == 5);
    auto v = validate_family(h.graph, fam, 200, 2);
    CHECK(v.failures == 0);
    CHECK(v.max_mono_clique <= 4);
  }

  TEST_CASE("lower-bound family (t=1, i=3) on H(30,7)") {
    auto h = build_h_n_k(30, 7, optimize_plan(30, 7, Objective::Edges), 1);
    auto fam = generate_lower_bound_family(1, 3, h);
    CHECK(fam.forbidden == 6);
    CHECK(validate_family(h.graph, fam, 200, 3).failures == 0);
  }

  TEST_CASE("RF(3,3) family") {
    auto h = build_h_n_k(20, 5, optimize_plan(20, 5, Objective::Edges), 1);
    auto fam = rf33_family(h);
    CHECK(fam.r == 3);
    CHECK(fam.palette == std::vector<int>{2, 3});
    auto v = validate_family(h.graph, fam, 1000, 4);
    CHECK(v.failures == 0);
    CHECK(v.max_mono_clique == 2);
  }

  TEST_CASE("validator reports a failing sample") {
    Graph g = complete_graph(4);
    PartitionedGraph pg;
    pg.graph = g;
    pg.parts = {VertexSet(4, {0, 1}), VertexSet(4, {2, 3})};
    auto fam = rf33_family(pg);
    fam.forbidden = 2;  // any monochromatic edge fails
    auto v = validate_family(g, fam, 5, 1);
    CHECK(v.failures == 5);
    CHECK(v.witness_clique.size() == 2);
    CHECK(v.witness_coloring.size() == 6);
  }

  TEST_CASE("weighted oracle matches brute force at n = 4") {
    // Independent enumeration of all 3^6 weight vectors.
    for (int k = 3; k <= 9; ++k) {
      int64_t best_e = -1, best_t = -1;
      for (int idx = 0; idx < 729; ++idx) {
        WeightedGraph g(4);
        int x = idx;
        for (int u = 0; u < 4; ++u)
          for (int v = u + 1; v < 4; ++v) {
            g.set_halves(u, v, x % 3);
            x /= 3;
          }
        if (oracle::weighted_clique_number(g) >= k) continue;
        best_e = std::max(best_e, edge_sum_halves(g));
        best_t = std::max(best_t, oracle::triangle_eighths(g));
      }
      CAPTURE(k);
      CHECK(weighted_bound_oracle(4, k, Quantity::Edges).maximum == Rational(best_e, 2));
      CHECK(weighted_bound_oracle(4, k, Quantity::Triangles).maximum == Rational(best_t, 8));
    }
  }

  TEST_CASE("weighted oracle edge cases") {
    auto all = weighted_bound_oracle(5, 11, Quantity::Edges);
    CHECK(all.maximum == Rational(10));
    CHECK(all.witness == WeightedGraph::uniform(5, 2));
    CHECK(all.graphs == 59049);
    CHECK_THROWS_AS(weighted_bound_oracle(7, 5, Quantity::Edges), Error);
    CHECK_THROWS_AS(weighted_bound_oracle(4, 2, Quantity::Edges), Error);
  }

  TEST_CASE("weighted oracle witness is a normal form") {
    for (int n = 4; n <= 5; ++n)
      for (int k = 4; k <= 6; ++k) {
        auto res = weighted_bound_oracle(n, k, Quantity::Edges);
        CHECK(res.witness_normal_form);
        REQUIRE(res.witness_structure);
        CHECK(res.witness_structure->weighted_clique_number() < k);
        CHECK(to_double(res.maximum) / (n * n) <= to_double(b(k)) + 0.15);
      }
  }

  TEST_CASE("parallel and serial oracle tables agree") {
    for (int n = 2; n <= 5; ++n) {
      auto a = build_oracle_table(n), s = build_oracle_table_serial(n);
      CHECK(a.best_e2 == s.best_e2);
      CHECK(a.best_t8 == s.best_t8);
      CHECK(a.arg_e2 == s.arg_e2);
      CHECK(a.arg_t8 == s.arg_t8);
      CHECK(a.nf_e2 == s.nf_e2);
      CHECK(a.nf_arg_t8 == s.nf_arg_t8);
      CHECK(a.count == s.count);
    }
  }
}
