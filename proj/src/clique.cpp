#include <algorithm>
#include <climits>

#include <omp.h>

#include "rtlab/graph.hpp"

namespace rtlab {

namespace {

// ---------------------------------------------------------------------------
// Branch and bound maximum clique with a greedy colouring bound (MCQ style).
// Parametrised over the set representation so the same search runs on the
// dense bit-row graph and on <=64-vertex masks.

struct DenseOps {
  using Set = VertexSet;
  const Graph& g;

  static bool empty(const Set& s) { return s.empty(); }
  static int first(const Set& s) { return s.first(); }
  static void reset(Set& s, int v) { s.reset(v); }
  Set intersect(const Set& p, int v) const {
    Set r = p;
    r.intersect(g.row(v));
    return r;
  }
  void remove_neighbors(Set& q, int v) const {
    auto row = g.row(v);
    auto w = q.words();
    for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~row[i];
  }
};

struct MaskOps {
  using Set = uint64_t;
  const uint64_t* adj;

  static bool empty(Set s) { return s == 0; }
  static int first(Set s) { return std::countr_zero(s); }
  static void reset(Set& s, int v) { s &= ~(uint64_t{1} << v); }
  Set intersect(Set p, int v) const { return p & adj[v]; }
  void remove_neighbors(Set& q, int v) const { q &= ~adj[v]; }
};

template <class Ops>
class CliqueSearch {
 public:
  using Set = typename Ops::Set;

  CliqueSearch(Ops ops, int stop_at) : ops_(ops), stop_at_(stop_at) {}

  /// Seeds the incumbent so that only strictly larger cliques are explored.
  void set_floor(int size) { floor_ = size; }

  void run(Set p) {
    if (Ops::empty(p)) return;
    expand(p);
  }

  const std::vector<int>& best() const { return best_; }

 private:
  int best_size() const { return std::max<int>(static_cast<int>(best_.size()), floor_); }
  bool done() const { return static_cast<int>(best_.size()) >= stop_at_; }

  void expand(Set p) {
    std::vector<int> order, colour;
    greedy_colour(p, order, colour);
    for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
      if (static_cast<int>(current_.size()) + colour[idx] <= best_size()) return;
      int v = order[idx];
      current_.push_back(v);
      Set np = ops_.intersect(p, v);
      if (Ops::empty(np)) {
        if (static_cast<int>(current_.size()) > best_size()) best_ = current_;
      } else {
        expand(np);
      }
      current_.pop_back();
      if (done()) return;
      Ops::reset(p, v);
    }
  }

  void greedy_colour(Set p, std::vector<int>& order, std::vector<int>& colour) const {
    int k = 0;
    while (!Ops::empty(p)) {
      ++k;
      Set q = p;
      while (!Ops::empty(q)) {
        int v = Ops::first(q);
        Ops::reset(q, v);
        Ops::reset(p, v);
        ops_.remove_neighbors(q, v);
        order.push_back(v);
        colour.push_back(k);
      }
    }
  }

  Ops ops_;
  int stop_at_;
  int floor_ = 0;
  std::vector<int> current_, best_;
};

/// Components of the complement of g[within]. Distinct components are
/// completely joined in g, so clique numbers add across them.
std::vector<VertexSet> co_components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> comps;
  VertexSet remaining = within;
  std::vector<int> stack;
  while (!remaining.empty()) {
    int s = remaining.first();
    VertexSet comp(g.n());
    comp.set(s);
    remaining.reset(s);
    stack.assign(1, s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      VertexSet non_nb = remaining;
      auto row = g.row(v);
      auto w = non_nb.words();
      for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~row[i];
      non_nb.for_each([&](int u) {
        comp.set(u);
        remaining.reset(u);
        stack.push_back(u);
      });
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<int> component_max_clique(const Graph& g, const VertexSet& comp, int stop_at) {
  CliqueSearch<DenseOps> search(DenseOps{g}, stop_at);
  search.run(comp);
  return search.best();
}

uint64_t count_within(const Graph& g, const VertexSet& p, int s) {
  if (s == 0) return 1;
  if (s == 1) return static_cast<uint64_t>(p.count());
  if (s == 2) {
    uint64_t twice = 0;
    p.for_each([&](int v) { twice += static_cast<uint64_t>(p.count_and(g.row(v))); });
    return twice / 2;
  }
  uint64_t total = 0;
  p.for_each([&](int v) {
    VertexSet q = p;
    q.intersect(g.row(v));
    q.keep_above(v);
    if (q.count() >= s - 1) total += count_within(g, q, s - 1);
  });
  return total;
}

uint64_t cliques_through(const Graph& g, int v, int s) {
  VertexSet q = g.neighbors(v);
  q.keep_above(v);
  if (q.count() < s - 1) return 0;
  return count_within(g, q, s - 1);
}

void check_clique_size(int s) {
  if (s < 1) throw precondition_error("InvalidArgument", "clique size must be >= 1");
}

/// Relabels g[within] (at most 64 vertices) into masks; complement if asked.
std::vector<uint64_t> local_masks(const Graph& g, const std::vector<int>& verts, bool complement) {
  std::size_t m = verts.size();
  std::vector<uint64_t> adj(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && (g.adjacent(verts[i], verts[j]) != complement)) adj[i] |= uint64_t{1} << j;
  return adj;
}

uint64_t low_mask(std::size_t m) { return m >= 64 ? ~uint64_t{0} : (uint64_t{1} << m) - 1; }

int mask_clique_number(const std::vector<uint64_t>& adj, uint64_t p, int stop_at,
                       std::vector<int>* witness = nullptr) {
  CliqueSearch<MaskOps> search(MaskOps{adj.data()}, stop_at);
  search.run(p);
  if (witness) *witness = search.best();
  return static_cast<int>(search.best().size());
}

void check_cap(int size, int cap) {
  if (size > cap)
    throw budget_error("ExactCapExceeded", "exact independence requested on " + std::to_string(size) +
                                               " vertices, cap is " + std::to_string(cap));
  if (size > 64) throw budget_error("ExactCapExceeded", "exact search is limited to 64 vertices");
}

}  // namespace

uint64_t count_cliques(const Graph& g, int s) {
  check_clique_size(s);
  if (s > g.n()) return 0;
  if (s <= 2) return count_cliques_serial(g, s);
  uint64_t total = 0;
  const int n = g.n();
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : total)
  for (int v = 0; v < n; ++v) total += cliques_through(g, v, s);
  return total;
}

uint64_t count_cliques_serial(const Graph& g, int s) {
  check_clique_size(s);
  if (s > g.n()) return 0;
  if (s == 1) return static_cast<uint64_t>(g.n());
  if (s == 2) return static_cast<uint64_t>(g.edge_count());
  uint64_t total = 0;
  for (int v = 0; v < g.n(); ++v) total += cliques_through(g, v, s);
  return total;
}

std::vector<std::vector<int>> list_cliques(const Graph& g, int s) {
  check_clique_size(s);
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, const VertexSet& p) -> void {
    if (static_cast<int>(cur.size()) == s) {
      out.push_back(cur);
      return;
    }
    p.for_each([&](int v) {
      VertexSet q = p;
      q.intersect(g.row(v));
      q.keep_above(v);
      if (q.count() + 1 + static_cast<int>(cur.size()) < s) return;
      cur.push_back(v);
      self(self, q);
      cur.pop_back();
    });
  };
  rec(rec, VertexSet::full(g.n()));
  return out;
}

std::vector<int> max_clique(const Graph& g, const VertexSet& within) {
  std::vector<int> clique;
  for (const auto& comp : co_components(g, within)) {
    auto part = component_max_clique(g, comp, INT_MAX);
    clique.insert(clique.end(), part.begin(), part.end());
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

std::vector<int> max_clique(const Graph& g) { return max_clique(g, VertexSet::full(g.n())); }

CliqueFreeResult is_clique_free(const Graph& g, int k) {
  if (k < 2) throw precondition_error("InvalidArgument", "is_clique_free needs k >= 2");
  CliqueFreeResult res;
  if (k > g.n()) return res;
  std::vector<int> clique;
  for (const auto& comp : co_components(g, VertexSet::full(g.n()))) {
    int need = k - static_cast<int>(clique.size());
    auto part = component_max_clique(g, comp, need);
    clique.insert(clique.end(), part.begin(), part.end());
    if (static_cast<int>(clique.size()) >= k) {
      clique.resize(k);
      std::sort(clique.begin(), clique.end());
      res.clique_free = false;
      res.witness = std::move(clique);
      return res;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------

std::vector<int> greedy_independent_set(const Graph& g, const VertexSet& within) {
  VertexSet remaining = within;
  std::vector<int> chosen;
  while (!remaining.empty()) {
    int best = -1, best_deg = INT_MAX;
    remaining.for_each([&](int v) {
      int d = remaining.count_and(g.row(v));
      if (d < best_deg) {
        best_deg = d;
        best = v;
      }
    });
    chosen.push_back(best);
    remaining.reset(best);
    auto row = g.row(best);
    auto w = remaining.words();
    for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~row[i];
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

namespace {

/// Greedy cover of g[within] by cliques; alpha <= number of cliques.
int clique_cover_bound(const Graph& g, const VertexSet& within) {
  VertexSet remaining = within;
  int cliques = 0;
  while (!remaining.empty()) {
    ++cliques;
    int v = remaining.first();
    remaining.reset(v);
    VertexSet cand = remaining;
    cand.intersect(g.row(v));
    while (!cand.empty()) {
      int u = cand.first();
      remaining.reset(u);
      cand.reset(u);
      cand.intersect(g.row(u));
    }
  }
  return cliques;
}

}  // namespace

int independence_number_within(const Graph& g, const VertexSet& within, int exact_cap) {
  auto verts = within.to_vector();
  check_cap(static_cast<int>(verts.size()), exact_cap);
  auto comp = local_masks(g, verts, true);
  return mask_clique_number(comp, low_mask(verts.size()), INT_MAX);
}

AlphaReport independence_number(const Graph& g, AlphaMode mode, int exact_cap) {
  AlphaReport rep;
  VertexSet all = VertexSet::full(g.n());
  if (mode == AlphaMode::Exact) {
    auto verts = all.to_vector();
    check_cap(g.n(), exact_cap);
    auto comp = local_masks(g, verts, true);
    std::vector<int> local;
    rep.lower = rep.upper = mask_clique_number(comp, low_mask(verts.size()), INT_MAX, &local);
    for (int i : local) rep.witness.push_back(verts[i]);
    std::sort(rep.witness.begin(), rep.witness.end());
    return rep;
  }
  rep.witness = greedy_independent_set(g, all);
  rep.lower = static_cast<int>(rep.witness.size());
  rep.upper = mode == AlphaMode::FractionalUpper ? clique_cover_bound(g, all) : g.n();
  return rep;
}

VertexSet max_independent_set(const Graph& g, const VertexSet& within, int exact_cap) {
  auto verts = within.to_vector();
  check_cap(static_cast<int>(verts.size()), exact_cap);
  const std::size_t m = verts.size();
  auto comp = local_masks(g, verts, true);
  int alpha = mask_clique_number(comp, low_mask(m), INT_MAX);

  // Walk vertices in increasing order and keep v whenever a maximum set
  // extending the current prefix still exists.
  VertexSet out(g.n());
  uint64_t cand = low_mask(m);
  int chosen = 0;
  for (std::size_t i = 0; i < m && chosen < alpha; ++i) {
    if (!((cand >> i) & 1U)) continue;
    uint64_t after = cand & comp[i] & ~low_mask(i + 1);
    int need = alpha - chosen - 1;
    bool ok = need == 0 || mask_clique_number(comp, after, need) >= need;
    if (ok) {
      out.set(verts[i]);
      ++chosen;
      cand = after;
    } else {
      cand &= ~(uint64_t{1} << i);
    }
  }
  return out;
}

}  // namespace rtlab
