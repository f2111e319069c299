#include "rtlab/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "rtlab/sphere.hpp"

namespace rtlab {

std::vector<int> PartitionedGraph::part_of() const {
  std::vector<int> out(graph.n(), -1);
  for (std::size_t p = 0; p < parts.size(); ++p) parts[p].for_each([&](int v) { out[v] = static_cast<int>(p); });
  return out;
}

int PartSizePlan::total() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }

Graph build_turan(int n, int r) { return turan_graph(n, r); }

GammaResult build_gamma(int n, uint64_t seed) {
  if (n < 1) throw precondition_error("InvalidArgument", "triangle-free graph needs n >= 1");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::mt19937_64 rng(seed);
  std::shuffle(pairs.begin(), pairs.end(), rng);

  // A pair skipped once keeps closing a triangle, so one pass over a random
  // order is the whole process.
  Graph g(n);
  for (auto [u, v] : pairs) {
    VertexSet common = g.neighbors(u);
    if (common.count_and(g.row(v)) == 0) g.add_edge(u, v);
  }
  GammaResult out;
  out.alpha_lower = static_cast<int>(greedy_independent_set(g, VertexSet::full(n)).size());
  out.graph = std::move(g);
  return out;
}

namespace {

std::vector<VertexSet> consecutive_parts(int n, const std::vector<int>& sizes) {
  std::vector<VertexSet> parts;
  int v = 0;
  for (int s : sizes) {
    VertexSet p(n);
    for (int i = 0; i < s; ++i) p.set(v++);
    parts.push_back(std::move(p));
  }
  return parts;
}

void join_complete(Graph& g, const VertexSet& a, const VertexSet& b) {
  a.for_each([&](int u) { b.for_each([&](int v) { g.add_edge(u, v); }); });
}

// Copies src onto the vertices listed in map (src vertex i -> map[i]).
int64_t embed(Graph& g, const Graph& src, const std::vector<int>& map) {
  auto edges = src.edges();
  for (auto [u, v] : edges) g.add_edge(map[u], map[v]);
  return static_cast<int64_t>(edges.size());
}

void place_gamma(PartitionedGraph& pg, int part, uint64_t seed) {
  std::vector<int> verts = pg.parts[part].to_vector();
  if (verts.empty()) return;
  GammaResult gamma = build_gamma(static_cast<int>(verts.size()), seed);
  pg.gamma_edges += embed(pg.graph, gamma.graph, verts);
  pg.gamma_parts.push_back(part);
}

// One shared sphere layout over `classes` (all of equal size). Class pairs
// marked in complete_pair are skipped here and joined by the caller.
void place_sphere_blocks(PartitionedGraph& pg, const std::vector<int>& classes,
                         const std::vector<std::vector<bool>>& complete_pair, int dim, double eps,
                         std::mt19937_64& rng) {
  if (classes.empty()) return;
  const int m = pg.parts[classes[0]].count();
  if (m == 0) return;
  const int c = static_cast<int>(classes.size());
  SphereLayout layout = sample_sphere_layout(dim, eps, c, m, rng);
  std::vector<PairRule> rule(static_cast<std::size_t>(c) * c, PairRule::None);
  for (int a = 0; a < c; ++a)
    for (int b = 0; b < c; ++b) {
      if (a == b)
        rule[a * c + b] = PairRule::Antipodal;
      else
        rule[a * c + b] = complete_pair[classes[a]][classes[b]] ? PairRule::None : PairRule::Cross;
    }
  Graph local = sphere_rule_graph(layout, rule);
  std::vector<int> map(static_cast<std::size_t>(c) * m);
  for (int a = 0; a < c; ++a) {
    std::vector<int> verts = pg.parts[classes[a]].to_vector();
    for (int i = 0; i < m; ++i) map[layout.vertex(a, i)] = verts[i];
  }
  embed(pg.graph, local, map);
  for (int a = 0; a < c; ++a)
    for (int b = a + 1; b < c; ++b)
      if (!complete_pair[classes[a]][classes[b]]) pg.be_blocks.emplace_back(classes[a], classes[b]);
}

void check_plan_sizes(const PartSizePlan& plan, int n, std::size_t parts) {
  if (plan.sizes.size() != parts)
    throw precondition_error("BadPlan", "plan has " + std::to_string(plan.sizes.size()) + " parts, expected " +
                                            std::to_string(parts));
  for (int s : plan.sizes)
    if (s < 0) throw precondition_error("BadPlan", "negative part size");
  if (plan.total() != n) throw precondition_error("BadPlan", "part sizes do not sum to n");
}

}  // namespace

PartitionedGraph build_h_n_k(int n, int k, const PartSizePlan& plan, uint64_t seed) {
  if (k < 3) throw precondition_error("InvalidArgument", "k must be >= 3");
  const int ell = k / 2;
  check_plan_sizes(plan, n, static_cast<std::size_t>(ell));
  const bool even = k % 2 == 0;
  if (even && plan.sizes[0] != plan.sizes[1]) throw precondition_error("BadPlan", "even k requires |V1| = |V2|");

  PartitionedGraph pg;
  pg.graph = Graph(n);
  pg.parts = consecutive_parts(n, plan.sizes);
  std::mt19937_64 master(seed);

  if (!even) {
    for (int i = 0; i < ell; ++i)
      for (int j = i + 1; j < ell; ++j) join_complete(pg.graph, pg.parts[i], pg.parts[j]);
    for (int i = 0; i < ell; ++i) place_gamma(pg, i, master());
    return pg;
  }

  std::vector<std::vector<bool>> complete(ell, std::vector<bool>(ell, true));
  complete[0][1] = complete[1][0] = false;
  std::mt19937_64 layout_rng(master());
  place_sphere_blocks(pg, {0, 1}, complete, plan.be_dim, plan.be_epsilon, layout_rng);
  for (int i = 0; i < ell; ++i)
    for (int j = std::max(i + 1, 2); j < ell; ++j) join_complete(pg.graph, pg.parts[i], pg.parts[j]);
  for (int i = 2; i < ell; ++i) place_gamma(pg, i, master());
  return pg;
}

Graph default_aux_graph(int s, int t) {
  if (t - s - 1 < 1) throw precondition_error("BadAuxGraph", "no K_" + std::to_string(t - s) + "-free graph on " +
                                                                  std::to_string(s) + " vertices exists");
  return turan_graph(s, t - s - 1);
}

PartitionedGraph build_h_n_s_t(int n, int s, int t, const Graph& h, const PartSizePlan& plan, uint64_t seed) {
  if (s < 3 || t <= s || t > 2 * s - 1)
    throw precondition_error("InvalidArgument", "need 3 <= s < t <= 2s-1");
  if (h.n() != s) throw precondition_error("BadAuxGraph", "auxiliary graph must have s vertices");
  if (t - s == 1 || !is_clique_free(h, t - s).clique_free)
    throw precondition_error("BadAuxGraph", "auxiliary graph contains K_" + std::to_string(t - s));
  check_plan_sizes(plan, n, static_cast<std::size_t>(s));

  PartitionedGraph pg;
  pg.graph = Graph(n);
  pg.parts = consecutive_parts(n, plan.sizes);

  std::vector<std::vector<bool>> complete(s, std::vector<bool>(s, false));
  std::vector<int> sphere_parts;
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) complete[i][j] = i != j && h.adjacent(i, j);
    if (h.degree(i) < s - 1) sphere_parts.push_back(i);
  }
  for (int i : sphere_parts)
    if (plan.sizes[i] != plan.sizes[sphere_parts[0]])
      throw precondition_error("BadPlan", "parts joined by BE blocks must have equal size");

  std::mt19937_64 master(seed);
  std::mt19937_64 layout_rng(master());
  place_sphere_blocks(pg, sphere_parts, complete, plan.be_dim, plan.be_epsilon, layout_rng);
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j)
      if (complete[i][j]) join_complete(pg.graph, pg.parts[i], pg.parts[j]);
  for (int i = 0; i < s; ++i)
    if (h.degree(i) == s - 1) place_gamma(pg, i, master());
  return pg;
}

// ---------------------------------------------------------------------------

double even_edge_density(int ell, double x) {
  const int L = ell - 2;
  double rest = L > 0 ? (1 - x) / L : 0.0;
  return x * x / 8 + (L > 0 ? x * (1 - x) : 0.0) + L * (L - 1) / 2.0 * rest * rest;
}

double even_triangle_density(int ell, double x) {
  const int L = ell - 2;
  double rest = L > 0 ? (1 - x) / L : 0.0;
  return L * (L - 1) * (L - 2) / 6.0 * rest * rest * rest + x * L * (L - 1) / 2.0 * rest * rest +
         0.5 * (x / 2) * (x / 2) * (1 - x);
}

namespace {

// Elementary symmetric sums e2, e3 of the part sizes.
std::pair<double, double> sym_sums(const std::vector<int>& sizes) {
  double e1 = 0, e2 = 0, e3 = 0;
  for (int s : sizes) {
    e3 += e2 * s;
    e2 += e1 * s;
    e1 += s;
  }
  return {e2, e3};
}

std::vector<int> balanced_sizes(int n, int parts) {
  std::vector<int> out(parts, n / parts);
  for (int i = 0; i < n % parts; ++i) ++out[i];
  return out;
}

}  // namespace

PartSizePlan balanced_plan(int n, int parts) {
  if (parts < 1) throw precondition_error("BadPlan", "need at least one part");
  if (n % parts != 0) throw precondition_error("BadPlan", "n must be divisible by the number of parts");
  PartSizePlan plan;
  plan.sizes.assign(parts, n / parts);
  return plan;
}

PartSizePlan optimize_plan(int n, int k, Objective objective) {
  if (k < 3) throw precondition_error("InvalidArgument", "k must be >= 3");
  if (n < 1) throw precondition_error("InvalidArgument", "n must be >= 1");
  const int ell = k / 2;
  PartSizePlan plan;
  plan.objective = objective;
  if (k % 2 == 1) {
    plan.sizes = balanced_sizes(n, ell);
    return plan;
  }
  if (ell == 2) {
    if (n % 2 != 0) throw precondition_error("BadPlan", "k = 4 needs even n (|V1| = |V2|)");
    plan.sizes = {n / 2, n / 2};
    plan.x = plan.x_continuous = 1.0;
    plan.value = objective == Objective::Edges ? even_edge_density(ell, 1.0) : even_triangle_density(ell, 1.0);
    return plan;
  }

  auto density = [&](double x) {
    return objective == Objective::Edges ? even_edge_density(ell, x) : even_triangle_density(ell, x);
  };
  Argmax cont = maximize_unit_interval(density);
  plan.x_continuous = cont.x;
  plan.value = cont.value;

  const int L = ell - 2;
  auto integer_value = [&](int a) {
    std::vector<int> rest = balanced_sizes(n - 2 * a, L);
    auto [e2, e3] = sym_sums(rest);
    double r = n - 2 * a;
    if (objective == Objective::Edges) return 0.5 * a * a + 2.0 * a * r + e2;
    return 0.5 * a * a * r + 2.0 * a * e2 + e3;
  };
  int centre = static_cast<int>(std::lround(cont.x * n / 2));
  int best = -1;
  double best_val = -1;
  for (int a = centre - 2; a <= centre + 2; ++a) {
    if (a < 0 || 2 * a > n) continue;
    double v = integer_value(a);
    if (v > best_val) {
      best_val = v;
      best = a;
    }
  }
  plan.sizes = {best, best};
  for (int s : balanced_sizes(n - 2 * best, L)) plan.sizes.push_back(s);
  plan.x = 2.0 * best / n;
  return plan;
}

}  // namespace rtlab
