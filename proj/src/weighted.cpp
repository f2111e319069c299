#include "rtlab/weighted.hpp"

#include <bit>
#include <fstream>
#include <sstream>

namespace rtlab {

WeightedGraph::WeightedGraph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw precondition_error("InvalidGraph", "vertex count out of range");
  w_.assign(static_cast<std::size_t>(n) * n, 0);
}

WeightedGraph WeightedGraph::uniform(int n, int halves) {
  WeightedGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.set_halves(u, v, halves);
  return g;
}

void WeightedGraph::set_halves(int u, int v, int h) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) throw precondition_error("InvalidEdge", "bad vertex pair");
  if (h < 0 || h > 2) throw precondition_error("InvalidWeight", "weight must be 0, 1/2 or 1");
  w_[static_cast<std::size_t>(u) * n_ + v] = static_cast<uint8_t>(h);
  w_[static_cast<std::size_t>(v) * n_ + u] = static_cast<uint8_t>(h);
}

Graph WeightedGraph::half_graph() const {
  Graph g(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (halves(u, v) >= 1) g.add_edge(u, v);
  return g;
}

Graph WeightedGraph::one_graph() const {
  Graph g(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (halves(u, v) == 2) g.add_edge(u, v);
  return g;
}

int64_t edge_sum_halves(const WeightedGraph& g) {
  int64_t s = 0;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) s += g.halves(u, v);
  return s;
}

Rational weighted_edge_sum(const WeightedGraph& g) { return Rational(edge_sum_halves(g), 2); }

namespace {

int64_t triangles_from(const WeightedGraph& g, int i) {
  const int n = g.n();
  int64_t s = 0;
  for (int j = i + 1; j < n; ++j) {
    int hij = g.halves(i, j);
    if (!hij) continue;
    for (int k = j + 1; k < n; ++k) s += hij * g.halves(i, k) * g.halves(j, k);
  }
  return s;
}

}  // namespace

int64_t triangle_sum_eighths(const WeightedGraph& g) {
  int64_t total = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : total)
  for (int i = 0; i < g.n(); ++i) total += triangles_from(g, i);
  return total;
}

int64_t triangle_sum_eighths_serial(const WeightedGraph& g) {
  int64_t total = 0;
  for (int i = 0; i < g.n(); ++i) total += triangles_from(g, i);
  return total;
}

Rational weighted_triangle_sum(const WeightedGraph& g) { return Rational(triangle_sum_eighths(g), 8); }

int64_t vertex_triangle_eighths(const WeightedGraph& g, int v) {
  int64_t s = 0;
  for (int a = 0; a < g.n(); ++a) {
    if (a == v || !g.halves(v, a)) continue;
    for (int b = a + 1; b < g.n(); ++b)
      if (b != v) s += g.halves(v, a) * g.halves(v, b) * g.halves(a, b);
  }
  return s;
}

int64_t pair_triangle_eighths(const WeightedGraph& g, int u, int v) {
  int64_t s = 0;
  int huv = g.halves(u, v);
  if (!huv) return 0;
  for (int w = 0; w < g.n(); ++w)
    if (w != u && w != v) s += huv * g.halves(u, w) * g.halves(v, w);
  return s;
}

bool is_weighted_clique(const WeightedGraph& g, const WeightedClique& c) {
  if (!(c.x_set - c.y_set).empty()) return false;
  auto y = c.y_set.to_vector();
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = i + 1; j < y.size(); ++j) {
      int h = g.halves(y[i], y[j]);
      if (h < 1) return false;
      if (h < 2 && c.x_set.test(y[i]) && c.x_set.test(y[j])) return false;
    }
  return true;
}

namespace {

// Branch and bound over 64-bit masks. Each vertex is excluded, joins Y only
// (+1) or joins X and Y (+2). Bound: greedy colour counts of G_{1/2} on the
// Y candidates plus G_1 on the X candidates.
class WeightedCliqueSearch {
 public:
  explicit WeightedCliqueSearch(const WeightedGraph& g) : n_(g.n()), half_(n_, 0), one_(n_, 0) {
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v) {
        if (u == v) continue;
        if (g.halves(u, v) >= 1) half_[u] |= uint64_t{1} << v;
        if (g.halves(u, v) == 2) one_[u] |= uint64_t{1} << v;
      }
  }

  void run() {
    uint64_t all = n_ == 64 ? ~uint64_t{0} : (uint64_t{1} << n_) - 1;
    expand(all, all, 0, 0, 0);
  }

  int best = 0;
  uint64_t best_x = 0, best_y = 0;

 private:
  int colours(uint64_t p, const std::vector<uint64_t>& adj) const {
    int c = 0;
    while (p) {
      uint64_t q = p;
      while (q) {
        int v = std::countr_zero(q);
        q &= ~(adj[v] | (uint64_t{1} << v));
        p &= ~(uint64_t{1} << v);
      }
      ++c;
    }
    return c;
  }

  void expand(uint64_t cand_y, uint64_t cand_x, uint64_t x, uint64_t y, int size) {
    if (size > best) {
      best = size;
      best_x = x;
      best_y = y;
    }
    if (!cand_y) return;
    if (size + colours(cand_y, half_) + colours(cand_x, one_) <= best) return;
    int v = std::countr_zero(cand_y);
    uint64_t bit = uint64_t{1} << v;
    uint64_t ny = cand_y & half_[v];
    if (cand_x & bit) expand(ny, cand_x & one_[v] & ny, x | bit, y | bit, size + 2);
    expand(ny, cand_x & ny, x, y | bit, size + 1);
    expand(cand_y & ~bit, cand_x & ~bit, x, y, size);
  }

  int n_;
  std::vector<uint64_t> half_, one_;
};

void check_weighted_cap(const WeightedGraph& g) {
  if (g.n() > kWeightedCap)
    throw budget_error("SizeCapExceeded", "weighted clique search is limited to 64 vertices");
}

VertexSet mask_to_set(int n, uint64_t m) {
  VertexSet s(n);
  while (m) {
    s.set(std::countr_zero(m));
    m &= m - 1;
  }
  return s;
}

}  // namespace

WeightedClique max_weighted_clique(const WeightedGraph& g) {
  check_weighted_cap(g);
  WeightedCliqueSearch search(g);
  search.run();
  return {mask_to_set(g.n(), search.best_x), mask_to_set(g.n(), search.best_y)};
}

int weighted_clique_number(const WeightedGraph& g) { return max_weighted_clique(g).size(); }

std::optional<WeightedClique> find_weighted_clique(const WeightedGraph& g, int ell) {
  if (ell < 1) throw precondition_error("InvalidArgument", "clique size must be >= 1");
  WeightedClique c = max_weighted_clique(g);
  int excess = c.size() - ell;
  if (excess < 0) return std::nullopt;
  // Dropping a vertex from X (keeping it in Y) or from Y-only lowers the size
  // by one, so every size up to the maximum is attained.
  for (int v = c.x_set.first(); v >= 0 && excess > 0; v = c.x_set.next(v)) {
    c.x_set.reset(v);
    --excess;
  }
  for (int v = c.y_set.first(); v >= 0 && excess > 0; v = c.y_set.next(v)) {
    c.y_set.reset(v);
    --excess;
  }
  return c;
}

WeightedGraph intersect(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.n() != b.n()) throw precondition_error("DimensionMismatch", "weighted graphs differ in size");
  WeightedGraph out(a.n());
  for (int u = 0; u < a.n(); ++u)
    for (int v = u + 1; v < a.n(); ++v) out.set_halves(u, v, std::min(a.halves(u, v), b.halves(u, v)));
  return out;
}

std::string to_text(const WeightedGraph& g) {
  std::ostringstream out;
  out << g.n() << '\n';
  static const char* names[] = {"0", "0.5", "1"};
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.halves(u, v)) out << u << ' ' << v << ' ' << names[g.halves(u, v)] << '\n';
  return out.str();
}

WeightedGraph parse_weighted_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  WeightedGraph g;
  bool have_header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#' || first[0] == 'c') continue;
    auto fail = [&](const std::string& why) {
      return precondition_error("BadGraphFile", "line " + std::to_string(lineno) + ": " + why);
    };
    if (!have_header) {
      g = WeightedGraph(std::stoi(first));
      have_header = true;
      continue;
    }
    int u = std::stoi(first), v = 0;
    std::string w;
    if (!(ls >> v >> w)) throw fail("expected 'u v w'");
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || u == v) throw fail("vertex out of range");
    int h = -1;
    if (w == "0" || w == "0.0")
      h = 0;
    else if (w == "0.5" || w == ".5" || w == "1/2")
      h = 1;
    else if (w == "1" || w == "1.0")
      h = 2;
    else
      throw fail("weight must be 0, 0.5 or 1");
    g.set_halves(u, v, h);
  }
  if (!have_header) throw precondition_error("BadGraphFile", "missing header");
  return g;
}

WeightedGraph read_weighted_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw precondition_error("BadGraphFile", "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_weighted_graph(buf.str());
}

}  // namespace rtlab
