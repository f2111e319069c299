#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rtlab/graph.hpp"

namespace rtlab {

inline constexpr int kWeightedCap = 64;

/// Complete graph with edge weights in {0, 1/2, 1}, stored as halves
/// {0, 1, 2}. A zero weight is a non-edge of G_{1/2}.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(int n);
  /// Every pair at `halves` (0, 1 or 2).
  static WeightedGraph uniform(int n, int halves);

  int n() const noexcept { return n_; }
  int halves(int u, int v) const noexcept { return w_[static_cast<std::size_t>(u) * n_ + v]; }
  void set_halves(int u, int v, int h);
  Rational weight(int u, int v) const { return Rational(halves(u, v), 2); }

  /// Pairs of weight >= 1/2.
  Graph half_graph() const;
  /// Pairs of weight 1.
  Graph one_graph() const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  int n_ = 0;
  std::vector<uint8_t> w_;
};

/// e(G) in halves.
int64_t edge_sum_halves(const WeightedGraph& g);
Rational weighted_edge_sum(const WeightedGraph& g);

/// T(G) in eighths (sum of products of halves). Parallel over the leading
/// vertex; the serial twin is the reference.
int64_t triangle_sum_eighths(const WeightedGraph& g);
int64_t triangle_sum_eighths_serial(const WeightedGraph& g);
Rational weighted_triangle_sum(const WeightedGraph& g);

/// T_v(G) and T_{uv}(G) in eighths.
int64_t vertex_triangle_eighths(const WeightedGraph& g, int v);
int64_t pair_triangle_eighths(const WeightedGraph& g, int u, int v);

/// Nested X subset of Y: X-pairs weight 1, Y-pairs weight >= 1/2.
struct WeightedClique {
  VertexSet x_set;
  VertexSet y_set;
  int size() const { return x_set.count() + y_set.count(); }
};

bool is_weighted_clique(const WeightedGraph& g, const WeightedClique& c);

/// A weighted clique of size exactly ell, or nullopt. Throws SizeCapExceeded
/// for n > 64.
std::optional<WeightedClique> find_weighted_clique(const WeightedGraph& g, int ell);

/// Largest weighted clique. Singletons count (X = Y = {v} has size 2), so a
/// nonempty graph has weighted clique number >= 2. Throws SizeCapExceeded.
WeightedClique max_weighted_clique(const WeightedGraph& g);
int weighted_clique_number(const WeightedGraph& g);

/// Pointwise minimum. Throws DimensionMismatch.
WeightedGraph intersect(const WeightedGraph& a, const WeightedGraph& b);

/// "n" header, then "u v w" lines with w in {0, 0.5, 1}; missing pairs are 0.
std::string to_text(const WeightedGraph& g);
WeightedGraph parse_weighted_graph(std::string_view text);
WeightedGraph read_weighted_graph_file(const std::string& path);

}  // namespace rtlab
