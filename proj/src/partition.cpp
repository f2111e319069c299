#include <cmath>

#include "rtlab/census.hpp"

namespace rtlab {

bool PartitionResult::ok() const {
  for (int a : alpha)
    if (a > threshold + 1e-9) return false;
  return true;
}

double partition_alpha_fraction(int r, double c) {
  if (r < 1) throw precondition_error("InvalidArgument", "need r >= 1");
  if (r == 1) return c;
  return std::pow(c, 3.0 * std::pow(2.0, r - 2) - 1.0);
}

namespace {

// Splits `within` among colors[from..] so that color i's independence number
// on its part stays at most tau. Returns the stripping rounds at this level.
int split(const std::vector<Graph>& color_graphs, const VertexSet& within, int from, double tau, int alpha_g,
          std::vector<VertexSet>& parts) {
  const int r = static_cast<int>(color_graphs.size());
  if (from == r - 1) {
    parts[from] |= within;
    return 0;
  }
  const Graph& g1 = color_graphs[from];
  VertexSet rest = within;
  int rounds = 0;
  while (!rest.empty() && independence_number_within(g1, rest) > tau) {
    VertexSet stripped = max_independent_set(g1, rest);
    rest -= stripped;
    ++rounds;
    // The stripped set is handed to the remaining colors with the fraction
    // the inner statement needs: alpha(G) <= c'^{3 2^{r'-2} - 1} |I|.
    const int inner_colors = r - from - 1;
    const double size = stripped.count();
    double c_inner = 1.0;
    if (inner_colors >= 2) {
      double exponent = 3.0 * std::pow(2.0, inner_colors - 2) - 1.0;
      c_inner = std::pow(alpha_g / size, 1.0 / exponent);
    }
    split(color_graphs, stripped, from + 1, c_inner * size, alpha_g, parts);
  }
  parts[from] |= rest;
  return rounds;
}

}  // namespace

PartitionResult partition_by_colors(const Graph& g, const EdgeColoring& coloring, double c) {
  if (!(c > 0.0) || !(c < 1.0)) throw precondition_error("InvalidArgument", "c must lie in (0,1)");
  const int r = coloring.r;
  if (r < 2) throw precondition_error("InvalidArgument", "need r >= 2");
  const int n = g.n();
  PartitionResult res;
  res.alpha_g = independence_number(g).lower;
  res.threshold = c * n;
  double bound = partition_alpha_fraction(r, c) * n;
  if (res.alpha_g > bound + 1e-9)
    throw precondition_error("PreconditionViolated", "alpha(G) = " + std::to_string(res.alpha_g) +
                                                         " exceeds c^{3 2^{r-2} - 1} n = " + std::to_string(bound));
  std::vector<Graph> color_graphs;
  for (int col = 1; col <= r; ++col) color_graphs.push_back(color_graph(g, coloring, col));
  res.parts.assign(r, VertexSet(n));
  res.rounds = split(color_graphs, VertexSet::full(n), 0, res.threshold, res.alpha_g, res.parts);
  for (int col = 0; col < r; ++col) res.alpha.push_back(independence_number_within(color_graphs[col], res.parts[col]));
  return res;
}

}  // namespace rtlab
