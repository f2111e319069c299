#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rtlab/graph.hpp"

namespace rtlab {

struct PartitionedGraph {
  Graph graph;
  std::vector<VertexSet> parts;
  std::vector<std::pair<int, int>> be_blocks;  ///< part index pairs joined by a BE block
  std::vector<int> gamma_parts;               ///< parts holding a triangle-free copy
  int64_t gamma_edges = 0;                    ///< edges contributed by the triangle-free copies

  std::vector<int> part_of() const;
};

enum class Objective { Edges, Triangles };

struct PartSizePlan {
  std::vector<int> sizes;
  double x = 0;             ///< |V1 u V2| / n for even k, 0 for odd k
  double x_continuous = 0;  ///< continuous argmax before rounding
  double value = 0;         ///< continuous objective at x_continuous
  Objective objective = Objective::Edges;
  int be_dim = 9;
  double be_epsilon = 0.3;

  int total() const;
};

/// Balanced complete r-partite graph.
Graph build_turan(int n, int r);

struct GammaResult {
  Graph graph;
  int alpha_lower = 0;
};

/// Random greedy triangle-free process: pairs are visited in a uniformly
/// random order and inserted unless they close a triangle. The result is
/// maximal triangle-free.
GammaResult build_gamma(int n, uint64_t seed);

/// Construction 1. Odd k: complete ell-partite graph with a triangle-free
/// copy in every part, ell = floor(k/2). Even k: BE block on V1 u V2,
/// complete bipartite between every other pair of parts, triangle-free copies
/// inside V3..V_ell. Throws BadPlan.
PartitionedGraph build_h_n_k(int n, int k, const PartSizePlan& plan, uint64_t seed);

/// Construction 2 on s parts: complete bipartite on edges of h, BE blocks on
/// non-edges, triangle-free copies inside parts of full h-degree. Parts that
/// carry a BE block must have equal size. Throws BadAuxGraph, BadPlan.
PartitionedGraph build_h_n_s_t(int n, int s, int t, const Graph& h, const PartSizePlan& plan, uint64_t seed);

/// Turan graph T(s, t-s-1), the default auxiliary graph for Construction 2.
Graph default_aux_graph(int s, int t);

/// Part sizes for H(n,k). Odd k: balanced. Even k: |V1| = |V2| = a with the
/// remaining parts balanced, a chosen by maximizing the edge or triangle
/// density of the construction (continuous argmax, then an integer scan of
/// a within +-2).
PartSizePlan optimize_plan(int n, int k, Objective objective);

/// Balanced plan with s equal parts (n divisible by s) for Construction 2.
PartSizePlan balanced_plan(int n, int parts);

struct Argmax {
  double x = 0;
  double value = 0;
};

/// Maximizes f on [0,1]: 1e-4 grid scan, then ternary search on the bracket
/// around the best grid point. Assumes f is unimodal near its maximum.
template <class F>
Argmax maximize_unit_interval(F&& f) {
  const int steps = 10000;
  int best = 0;
  double best_val = f(0.0);
  for (int i = 1; i <= steps; ++i) {
    double v = f(static_cast<double>(i) / steps);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  double lo = std::max(0.0, (best - 1.0) / steps), hi = std::min(1.0, (best + 1.0) / steps);
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
    if (f(m1) < f(m2))
      lo = m1;
    else
      hi = m2;
  }
  Argmax out{(lo + hi) / 2, f((lo + hi) / 2)};
  if (best_val > out.value) out = {static_cast<double>(best) / steps, best_val};
  return out;
}

/// Continuous densities of H(n,k) as functions of x = |V1 u V2| / n (even k).
double even_edge_density(int ell, double x);
double even_triangle_density(int ell, double x);

}  // namespace rtlab
