#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "rtlab/graph.hpp"

namespace rtlab {

using Point = std::vector<double>;

struct SphereConfig {
  int d = 9;             ///< sphere dimension; points live in R^{d+1}
  double epsilon = 0.3;  ///< threshold slack
  int n = 200;           ///< total vertex count, even
  uint64_t seed = 1;

  double mu() const { return epsilon / std::sqrt(static_cast<double>(d)); }
  /// Throws InvalidConfig.
  void validate() const;
};

/// Uniform point on S^d (a unit vector in R^{d+1}) from a normalised
/// Gaussian vector. Vectors with norm below 1e-6 are resampled.
Point sample_unit_point(int d, std::mt19937_64& rng);

/// Unit vector at chord distance strictly below max_chord from center.
Point sample_near(const Point& center, double max_chord, std::mt19937_64& rng);

double squared_distance(const Point& a, const Point& b);

/// How a pair of point classes is joined.
enum class PairRule : uint8_t {
  None,       ///< no edges
  Antipodal,  ///< edge iff distance > 2 - mu
  Cross,      ///< edge iff distance < sqrt(2) - mu
  Complete,   ///< every pair adjacent
};

/// Points for `classes` classes sharing `domains` random domain centres: the
/// i-th point of every class lies within mu/4 of centre i, so points with the
/// same index are pairwise closer than mu/2.
struct SphereLayout {
  int d = 0;
  double mu = 0;
  int classes = 0;
  int domains = 0;
  std::vector<Point> points;  ///< vertex c * domains + i is point i of class c

  int vertex(int cls, int i) const { return cls * domains + i; }
  int class_of(int v) const { return v / domains; }
};

SphereLayout sample_sphere_layout(int d, double epsilon, int classes, int domains, std::mt19937_64& rng);

/// Edges of the layout under rule[a * classes + b]; distances are compared in
/// squared form against (sqrt(2)-mu)^2 and (2-mu)^2 with strict inequalities.
/// Rows are filled in parallel.
Graph sphere_rule_graph(const SphereLayout& layout, const std::vector<PairRule>& rule);
Graph sphere_rule_graph_serial(const SphereLayout& layout, const std::vector<PairRule>& rule);

struct BEGraph {
  Graph graph;
  VertexSet x_side;  ///< vertices 0 .. n/2-1, x_i = i
  VertexSet y_side;  ///< vertices n/2 .. n-1, y_i = n/2 + i
  std::vector<Point> points;
  double mu = 0;

  int half() const { return graph.n() / 2; }
  int partner(int v) const { return v < half() ? v + half() : v - half(); }
};

/// Bollobas-Erdos graph on paired sphere points: x_i y_j adjacent iff their
/// distance is below sqrt(2)-mu; same-side pairs adjacent iff their distance
/// exceeds 2-mu. Throws InvalidConfig.
BEGraph build_be_graph(const SphereConfig& cfg);

struct CertificateReport {
  bool k4_free = false;
  std::vector<int> k4_witness;
  bool x_triangle_free = false;
  bool y_triangle_free = false;
  double cross_density = 0;  ///< e(X,Y) / (|X||Y|)
  int64_t cross_edges = 0;
  int64_t inner_edges = 0;   ///< e(G[X]) + e(G[Y])
  int alpha_lower = 0;       ///< greedy independent set size
};

CertificateReport certify_be_properties(const BEGraph& be);

}  // namespace rtlab
