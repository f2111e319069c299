#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>

#include "rtlab/census.hpp"

namespace rtlab {

EdgeColoring coloring_from_triples(const Graph& g, int r, const std::vector<std::array<int, 3>>& triples) {
  if (r < 2) throw precondition_error("BadColoring", "need r >= 2");
  auto edges = g.edges();
  std::map<std::pair<int, int>, std::size_t> index;
  for (std::size_t i = 0; i < edges.size(); ++i) index[edges[i]] = i;
  EdgeColoring out;
  out.r = r;
  out.color.assign(edges.size(), 0);
  for (auto [u, v, c] : triples) {
    if (u > v) std::swap(u, v);
    auto it = index.find({u, v});
    if (it == index.end())
      throw precondition_error("BadColoring", "pair " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
    if (c < 1 || c > r) throw precondition_error("BadColoring", "color out of range");
    if (out.color[it->second] != 0) throw precondition_error("BadColoring", "edge colored twice");
    out.color[it->second] = c;
  }
  for (int c : out.color)
    if (c == 0) throw precondition_error("BadColoring", "some edge is uncolored");
  return out;
}

Graph color_graph(const Graph& g, const EdgeColoring& coloring, int c) {
  auto edges = g.edges();
  if (coloring.color.size() != edges.size()) throw precondition_error("BadColoring", "coloring size mismatch");
  Graph out(g.n());
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (coloring.color[i] == c) out.add_edge(edges[i].first, edges[i].second);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

BigInt power(int r, int64_t e) {
  BigInt out = 1;
  for (int64_t i = 0; i < e; ++i) out *= r;
  return out;
}

double log2_big(const BigInt& x) {
  if (x <= 0) return -INFINITY;
  unsigned bits = boost::multiprecision::msb(x);
  if (bits < 60) return std::log2(x.convert_to<double>());
  BigInt top = x >> (bits - 52);
  return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 52);
}

// Constrained edges in search order plus, per position, the cliques whose
// last edge sits there.
struct CliquePlan {
  int positions = 0;
  int64_t free_edges = 0;
  std::vector<std::vector<int>> clique_edges;       // positions of each clique's edges
  std::vector<std::vector<int>> check_at;           // cliques completed at position p
};

CliquePlan make_plan(const Graph& g, int k) {
  auto edges = g.edges();
  std::map<std::pair<int, int>, int> index;
  for (std::size_t i = 0; i < edges.size(); ++i) index[edges[i]] = static_cast<int>(i);
  auto cliques = list_cliques(g, k);
  std::vector<std::vector<int>> by_edge_index;
  std::vector<int> load(edges.size(), 0);
  for (const auto& c : cliques) {
    std::vector<int> es;
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b) es.push_back(index[{c[a], c[b]}]);
    for (int e : es) ++load[e];
    by_edge_index.push_back(std::move(es));
  }
  std::vector<int> order;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (load[e] > 0) order.push_back(static_cast<int>(e));
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return load[a] > load[b]; });
  std::vector<int> pos(edges.size(), -1);
  for (std::size_t p = 0; p < order.size(); ++p) pos[order[p]] = static_cast<int>(p);

  CliquePlan plan;
  plan.positions = static_cast<int>(order.size());
  plan.free_edges = static_cast<int64_t>(edges.size()) - plan.positions;
  plan.check_at.assign(order.size(), {});
  for (std::size_t c = 0; c < by_edge_index.size(); ++c) {
    std::vector<int> ps;
    for (int e : by_edge_index[c]) ps.push_back(pos[e]);
    int last = *std::max_element(ps.begin(), ps.end());
    plan.check_at[last].push_back(static_cast<int>(c));
    plan.clique_edges.push_back(std::move(ps));
  }
  return plan;
}

bool position_ok(const CliquePlan& plan, const std::vector<int>& colors, int p) {
  for (int c : plan.check_at[p]) {
    const auto& ps = plan.clique_edges[c];
    int first = colors[ps[0]];
    bool mono = true;
    for (std::size_t i = 1; i < ps.size() && mono; ++i) mono = colors[ps[i]] == first;
    if (mono) return false;
  }
  return true;
}

uint64_t dfs_count(const CliquePlan& plan, int r, std::vector<int>& colors, int p) {
  if (p == plan.positions) return 1;
  uint64_t total = 0;
  for (int c = 1; c <= r; ++c) {
    colors[p] = c;
    if (position_ok(plan, colors, p)) total += dfs_count(plan, r, colors, p + 1);
  }
  return total;
}

void check_census_args(const Graph& g, int r, int k) {
  if (r < 2) throw precondition_error("InvalidArgument", "need r >= 2");
  if (k < 2) throw precondition_error("InvalidArgument", "need k >= 2");
  (void)g;
}

void check_budget(const Graph& g, int r) {
  double space = census_log2_space(g, r);
  if (space > kCensusLog2Budget)
    throw budget_error("BudgetExceeded", "search space r^e = 2^" + std::to_string(space) + " exceeds 2^40");
}

BigInt exhaustive_parallel(const Graph& g, int r, int k) {
  CliquePlan plan = make_plan(g, k);
  if (plan.positions == 0) return power(r, plan.free_edges);
  // Enumerate valid color prefixes of a fixed depth, then finish each in
  // parallel. Counts are summed, so the result does not depend on threads.
  int depth = 0;
  int64_t prefixes = 1;
  while (depth < plan.positions && prefixes < 4096) {
    ++depth;
    prefixes *= r;
  }
  std::vector<std::vector<int>> starts;
  std::vector<int> colors(plan.positions, 0);
  auto collect = [&](auto&& self, int p) -> void {
    if (p == depth) {
      starts.push_back(colors);
      return;
    }
    for (int c = 1; c <= r; ++c) {
      colors[p] = c;
      if (position_ok(plan, colors, p)) self(self, p + 1);
    }
  };
  collect(collect, 0);
  uint64_t total = 0;
  const int64_t count = static_cast<int64_t>(starts.size());
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
  for (int64_t s = 0; s < count; ++s) {
    std::vector<int> local = starts[s];
    total += dfs_count(plan, r, local, depth);
  }
  return BigInt(total) * power(r, plan.free_edges);
}

BigInt inclusion_exclusion(const Graph& g, int r, int k) {
  const int64_t e = g.edge_count();
  auto cliques = list_cliques(g, k);
  if (cliques.size() > 22) throw budget_error("BudgetExceeded", "inclusion-exclusion limited to 22 cliques");
  if (e > 64) throw budget_error("BudgetExceeded", "inclusion-exclusion limited to 64 edges");
  auto edges = g.edges();
  std::map<std::pair<int, int>, int> index;
  for (std::size_t i = 0; i < edges.size(); ++i) index[edges[i]] = static_cast<int>(i);
  const int q = static_cast<int>(cliques.size());
  std::vector<uint64_t> emask(q, 0);
  for (int c = 0; c < q; ++c)
    for (std::size_t a = 0; a < cliques[c].size(); ++a)
      for (std::size_t b = a + 1; b < cliques[c].size(); ++b)
        emask[c] |= uint64_t{1} << index[{cliques[c][a], cliques[c][b]}];
  std::vector<uint32_t> share(q, 0);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      if (a != b && (emask[a] & emask[b])) share[a] |= 1U << b;

  // coeff[x] collects signed counts of subsets contributing r^x.
  std::vector<int64_t> coeff(static_cast<std::size_t>(e) + q + 1, 0);
  for (uint32_t s = 0; s < (1U << q); ++s) {
    uint64_t covered = 0;
    for (uint32_t t = s; t; t &= t - 1) covered |= emask[std::countr_zero(t)];
    int comps = 0;
    uint32_t left = s;
    while (left) {
      uint32_t frontier = left & (~left + 1);
      uint32_t comp = 0;
      while (frontier) {
        comp |= frontier;
        uint32_t next = 0;
        for (uint32_t t = frontier; t; t &= t - 1) next |= share[std::countr_zero(t)];
        frontier = next & s & ~comp;
      }
      left &= ~comp;
      ++comps;
    }
    int exponent = static_cast<int>(e - std::popcount(covered)) + comps;
    coeff[exponent] += (std::popcount(s) % 2 == 0) ? 1 : -1;
  }
  BigInt total = 0;
  for (std::size_t x = 0; x < coeff.size(); ++x)
    if (coeff[x]) total += BigInt(coeff[x]) * power(r, static_cast<int64_t>(x));
  return total;
}

}  // namespace

double census_log2_space(const Graph& g, int r) { return static_cast<double>(g.edge_count()) * std::log2(r); }

BigInt count_valid_colorings_serial(const Graph& g, int r, int k) {
  check_census_args(g, r, k);
  check_budget(g, r);
  CliquePlan plan = make_plan(g, k);
  std::vector<int> colors(plan.positions, 0);
  return BigInt(dfs_count(plan, r, colors, 0)) * power(r, plan.free_edges);
}

CensusResult count_valid_colorings(const Graph& g, int r, int k, CensusMode mode, int64_t samples, uint64_t seed) {
  check_census_args(g, r, k);
  CensusResult res;
  res.r = r;
  res.k = k;
  res.edges = g.edge_count();
  res.total = power(r, res.edges);
  switch (mode) {
    case CensusMode::Exhaustive:
      check_budget(g, r);
      res.valid = exhaustive_parallel(g, r, k);
      break;
    case CensusMode::InclusionExclusion:
      res.valid = inclusion_exclusion(g, r, k);
      break;
    case CensusMode::Sample: {
      if (samples < 1) throw precondition_error("InvalidArgument", "need at least one sample");
      CliquePlan plan = make_plan(g, k);
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<int> pick(1, r);
      std::vector<int> colors(plan.positions, 0);
      int64_t hits = 0;
      for (int64_t s = 0; s < samples; ++s) {
        bool ok = true;
        for (int p = 0; p < plan.positions; ++p) colors[p] = pick(rng);
        for (int p = 0; p < plan.positions && ok; ++p) ok = position_ok(plan, colors, p);
        hits += ok;
      }
      res.exact = false;
      res.samples = samples;
      res.fraction = static_cast<double>(hits) / static_cast<double>(samples);
      res.valid = BigInt(hits) * res.total / samples;
      res.log2_valid = hits ? std::log2(res.fraction) + log2_big(res.total) : -INFINITY;
      return res;
    }
  }
  res.log2_valid = log2_big(res.valid);
  res.fraction = res.total > 0 ? std::exp2(res.log2_valid - log2_big(res.total)) : 0.0;
  return res;
}

// ---------------------------------------------------------------------------

namespace {

// Pair (i,j), i<j, in colex order: (0,1),(0,2),(1,2),(0,3),...
int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

// Code bit for pair index p is bit (pairs-1-p): earlier pairs are more
// significant, so "smaller code" compares pair by pair.
uint64_t graph_code(const Graph& g, const std::vector<int>& perm) {
  const int n = g.n();
  const int pairs = n * (n - 1) / 2;
  uint64_t code = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (g.adjacent(perm[i], perm[j])) code |= uint64_t{1} << (pairs - 1 - pair_index(i, j));
  return code;
}

uint64_t canonical_code(const Graph& g, std::vector<int>* best_perm) {
  const int n = g.n();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t best = ~uint64_t{0};
  do {
    uint64_t c = graph_code(g, perm);
    if (c < best) {
      best = c;
      if (best_perm) *best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Graph from_code(int n, uint64_t code) {
  Graph g(n);
  const int pairs = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((code >> (pairs - 1 - pair_index(i, j))) & 1U) g.add_edge(i, j);
  return g;
}

}  // namespace

Graph canonical_graph(const Graph& g) {
  if (g.n() > 10) throw budget_error("BudgetExceeded", "canonical form limited to 10 vertices");
  return from_code(g.n(), canonical_code(g, nullptr));
}

std::vector<Graph> all_graphs_up_to_isomorphism(int n) {
  if (n < 0 || n > 7) throw budget_error("BudgetExceeded", "graph enumeration limited to n <= 7");
  static std::mutex mu;
  static std::map<int, std::vector<uint64_t>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (!cache.count(0)) cache[0] = {0};
  for (int m = 1; m <= n; ++m) {
    if (cache.count(m)) continue;
    const auto& prev = cache[m - 1];
    std::vector<uint64_t> candidates;
    for (uint64_t code : prev) {
      Graph base = from_code(m - 1, code);
      for (uint32_t nb = 0; nb < (1U << (m - 1)); ++nb) {
        Graph g(m);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for (int u = 0; u < m - 1; ++u)
          if ((nb >> u) & 1U) g.add_edge(u, m - 1);
        candidates.push_back(canonical_code(g, nullptr));
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    cache[m] = std::move(candidates);
  }
  std::vector<Graph> out;
  for (uint64_t code : cache[n]) out.push_back(from_code(n, code));
  return out;
}

CensusMaximum max_census_over_graphs(int n, int r, int k, std::optional<int> alpha_max) {
  if (n < 1 || n > 7) throw budget_error("BudgetExceeded", "census maximization limited to 1 <= n <= 7");
  auto graphs = all_graphs_up_to_isomorphism(n);
  CensusMaximum best;
  best.valid = -1;
  for (const Graph& g : graphs) {
    if (alpha_max && independence_number(g).lower > *alpha_max) continue;
    ++best.graphs_scanned;
    BigInt v = count_valid_colorings(g, r, k).valid;
    if (v > best.valid) {
      best.valid = v;
      best.graph = g;
    }
  }
  if (best.graphs_scanned == 0) throw precondition_error("NoGraph", "no graph satisfies the independence bound");
  return best;
}

}  // namespace rtlab
