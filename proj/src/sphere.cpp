#include "rtlab/sphere.hpp"

#include <omp.h>

namespace rtlab {

void SphereConfig::validate() const {
  if (n <= 0 || n % 2 != 0) throw precondition_error("InvalidConfig", "n must be positive and even");
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) throw precondition_error("InvalidConfig", "epsilon must lie in (0,1)");
  if (d < 2) throw precondition_error("InvalidConfig", "dimension must be >= 2");
  if (n > kMaxVertices) throw precondition_error("InvalidConfig", "n exceeds 4096");
}

namespace {

double norm(const Point& p) {
  double s = 0;
  for (double x : p) s += x * x;
  return std::sqrt(s);
}

void normalize(Point& p) {
  double r = norm(p);
  for (double& x : p) x /= r;
}

}  // namespace

Point sample_unit_point(int d, std::mt19937_64& rng) {
  if (d < 1) throw precondition_error("InvalidConfig", "dimension must be >= 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Point p(static_cast<std::size_t>(d) + 1);
  do {
    for (double& x : p) x = gauss(rng);
  } while (norm(p) < 1e-6);
  normalize(p);
  return p;
}

Point sample_near(const Point& center, double max_chord, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Point t(center.size());
  double tn = 0;
  do {
    double dot = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      t[i] = gauss(rng);
      dot += t[i] * center[i];
    }
    for (std::size_t i = 0; i < t.size(); ++i) t[i] -= dot * center[i];
    tn = norm(t);
  } while (tn < 1e-6);
  for (double& x : t) x /= tn;

  // Chord r corresponds to angle 2 asin(r/2); r is kept strictly inside the
  // bound with a small safety factor against rounding.
  double chord = unit(rng) * max_chord * (1.0 - 1e-9);
  double theta = 2.0 * std::asin(chord / 2.0);
  Point p(center.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::cos(theta) * center[i] + std::sin(theta) * t[i];
  normalize(p);
  return p;
}

double squared_distance(const Point& a, const Point& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double diff = a[i] - b[i];
    s += diff * diff;
  }
  return s;
}

SphereLayout sample_sphere_layout(int d, double epsilon, int classes, int domains, std::mt19937_64& rng) {
  SphereLayout layout;
  layout.d = d;
  layout.mu = epsilon / std::sqrt(static_cast<double>(d));
  layout.classes = classes;
  layout.domains = domains;
  layout.points.resize(static_cast<std::size_t>(classes) * domains);
  for (int i = 0; i < domains; ++i) {
    Point center = sample_unit_point(d, rng);
    for (int c = 0; c < classes; ++c) layout.points[layout.vertex(c, i)] = sample_near(center, layout.mu / 4.0, rng);
  }
  return layout;
}

namespace {

struct RuleThresholds {
  double cross_sq;      // (sqrt2 - mu)^2
  double antipodal_sq;  // (2 - mu)^2
};

RuleThresholds thresholds(double mu) {
  double c = std::sqrt(2.0) - mu;
  double a = 2.0 - mu;
  return {c * c, a * a};
}

bool rule_edge(PairRule rule, double dist_sq, const RuleThresholds& t) {
  switch (rule) {
    case PairRule::Cross: return dist_sq < t.cross_sq;
    case PairRule::Antipodal: return dist_sq > t.antipodal_sq;
    case PairRule::Complete: return true;
    case PairRule::None: return false;
  }
  return false;
}

void fill_row(const SphereLayout& layout, const std::vector<PairRule>& rule, const RuleThresholds& t, int u,
              int words, uint64_t* row) {
  const int n = static_cast<int>(layout.points.size());
  const int cu = layout.class_of(u);
  for (int v = 0; v < n; ++v) {
    if (v == u) continue;
    PairRule r = rule[static_cast<std::size_t>(cu) * layout.classes + layout.class_of(v)];
    if (r == PairRule::None) continue;
    if (r == PairRule::Complete || rule_edge(r, squared_distance(layout.points[u], layout.points[v]), t))
      row[v >> 6] |= uint64_t{1} << (v & 63);
  }
  (void)words;
}

void check_rule(const SphereLayout& layout, const std::vector<PairRule>& rule) {
  if (rule.size() != static_cast<std::size_t>(layout.classes) * layout.classes)
    throw precondition_error("InvalidConfig", "rule matrix has wrong size");
  for (int a = 0; a < layout.classes; ++a)
    for (int b = 0; b < layout.classes; ++b)
      if (rule[a * layout.classes + b] != rule[b * layout.classes + a])
        throw precondition_error("InvalidConfig", "rule matrix must be symmetric");
}

}  // namespace

Graph sphere_rule_graph(const SphereLayout& layout, const std::vector<PairRule>& rule) {
  check_rule(layout, rule);
  const int n = static_cast<int>(layout.points.size());
  const int words = (n + 63) / 64;
  const auto t = thresholds(layout.mu);
  std::vector<uint64_t> rows(static_cast<std::size_t>(n) * words, 0);
#pragma omp parallel for schedule(static)
  for (int u = 0; u < n; ++u) fill_row(layout, rule, t, u, words, rows.data() + static_cast<std::size_t>(u) * words);
  return Graph::from_rows(n, std::move(rows));
}

Graph sphere_rule_graph_serial(const SphereLayout& layout, const std::vector<PairRule>& rule) {
  check_rule(layout, rule);
  const int n = static_cast<int>(layout.points.size());
  const auto t = thresholds(layout.mu);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      PairRule r = rule[static_cast<std::size_t>(layout.class_of(u)) * layout.classes + layout.class_of(v)];
      if (rule_edge(r, r == PairRule::Complete || r == PairRule::None
                           ? 0.0
                           : squared_distance(layout.points[u], layout.points[v]),
                    t))
        g.add_edge(u, v);
    }
  return g;
}

BEGraph build_be_graph(const SphereConfig& cfg) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  const int half = cfg.n / 2;
  SphereLayout layout = sample_sphere_layout(cfg.d, cfg.epsilon, 2, half, rng);
  const std::vector<PairRule> rule = {PairRule::Antipodal, PairRule::Cross, PairRule::Cross, PairRule::Antipodal};
  BEGraph be;
  be.graph = sphere_rule_graph(layout, rule);
  be.x_side = VertexSet(cfg.n);
  be.y_side = VertexSet(cfg.n);
  for (int i = 0; i < half; ++i) {
    be.x_side.set(i);
    be.y_side.set(half + i);
  }
  be.points = std::move(layout.points);
  be.mu = layout.mu;
  return be;
}

CertificateReport certify_be_properties(const BEGraph& be) {
  CertificateReport rep;
  const Graph& g = be.graph;
  auto k4 = is_clique_free(g, 4);
  rep.k4_free = k4.clique_free;
  rep.k4_witness = k4.witness;
  rep.x_triangle_free = is_clique_free(g.induced(be.x_side), 3).clique_free;
  rep.y_triangle_free = is_clique_free(g.induced(be.y_side), 3).clique_free;
  rep.cross_edges = g.edges_between(be.x_side, be.y_side);
  double pairs = static_cast<double>(be.x_side.count()) * be.y_side.count();
  rep.cross_density = pairs > 0 ? static_cast<double>(rep.cross_edges) / pairs : 0.0;
  rep.inner_edges = g.edges_within(be.x_side) + g.edges_within(be.y_side);
  rep.alpha_lower = static_cast<int>(greedy_independent_set(g, VertexSet::full(g.n())).size());
  return rep;
}

}  // namespace rtlab
