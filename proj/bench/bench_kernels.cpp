#include <benchmark/benchmark.h>

#include <random>

#include "rtlab/census.hpp"
#include "rtlab/constructions.hpp"
#include "rtlab/sphere.hpp"
#include "rtlab/weighted.hpp"

using namespace rtlab;

namespace {

Graph random_graph(int n, double p, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

WeightedGraph random_weighted(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> h(0, 2);
  WeightedGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.set_halves(u, v, h(rng));
  return g;
}

SphereLayout layout(int domains) {
  std::mt19937_64 rng(7);
  return sample_sphere_layout(9, 0.3, 2, domains, rng);
}

const std::vector<PairRule> kBeRule = {PairRule::Antipodal, PairRule::Cross, PairRule::Cross, PairRule::Antipodal};

}  // namespace

static void BM_CountCliques(benchmark::State& st) {
  Graph g = random_graph(static_cast<int>(st.range(0)), 0.5, 1);
  for (auto _ : st) benchmark::DoNotOptimize(count_cliques(g, 4));
}
static void BM_CountCliquesSerial(benchmark::State& st) {
  Graph g = random_graph(static_cast<int>(st.range(0)), 0.5, 1);
  for (auto _ : st) benchmark::DoNotOptimize(count_cliques_serial(g, 4));
}
BENCHMARK(BM_CountCliques)->Arg(100)->Arg(200);
BENCHMARK(BM_CountCliquesSerial)->Arg(100)->Arg(200);

static void BM_SphereRule(benchmark::State& st) {
  auto l = layout(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(sphere_rule_graph(l, kBeRule));
}
static void BM_SphereRuleSerial(benchmark::State& st) {
  auto l = layout(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(sphere_rule_graph_serial(l, kBeRule));
}
BENCHMARK(BM_SphereRule)->Arg(500)->Arg(2000);
BENCHMARK(BM_SphereRuleSerial)->Arg(500)->Arg(2000);

static void BM_TriangleSum(benchmark::State& st) {
  auto g = random_weighted(static_cast<int>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(triangle_sum_eighths(g));
}
static void BM_TriangleSumSerial(benchmark::State& st) {
  auto g = random_weighted(static_cast<int>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(triangle_sum_eighths_serial(g));
}
BENCHMARK(BM_TriangleSum)->Arg(200)->Arg(500);
BENCHMARK(BM_TriangleSumSerial)->Arg(200)->Arg(500);

static void BM_Census(benchmark::State& st) {
  Graph g = complete_graph(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(count_valid_colorings(g, 2, 3));
}
static void BM_CensusSerial(benchmark::State& st) {
  Graph g = complete_graph(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(count_valid_colorings_serial(g, 2, 3));
}
BENCHMARK(BM_Census)->Arg(5)->Arg(6);
BENCHMARK(BM_CensusSerial)->Arg(5)->Arg(6);

static void BM_OracleTable(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(build_oracle_table(static_cast<int>(st.range(0))));
}
static void BM_OracleTableSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(build_oracle_table_serial(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_OracleTable)->Arg(5);
BENCHMARK(BM_OracleTableSerial)->Arg(5);

BENCHMARK_MAIN();
