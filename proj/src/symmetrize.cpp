#include "rtlab/symmetrize.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "rtlab/constructions.hpp"

namespace rtlab {

int BlowupStructure::m_prime() const {
  int mx = -1;
  for (int b : b_of) mx = std::max(mx, b);
  return mx + 1;
}

int BlowupStructure::n() const { return std::accumulate(a_sizes.begin(), a_sizes.end(), 0); }

std::vector<std::vector<int>> BlowupStructure::b_members() const {
  std::vector<std::vector<int>> out(m_prime());
  for (int i = 0; i < m(); ++i) out[b_of[i]].push_back(i);
  return out;
}

WeightedGraph BlowupStructure::class_graph() const {
  WeightedGraph g(m());
  for (int i = 0; i < m(); ++i)
    for (int j = i + 1; j < m(); ++j) g.set_halves(i, j, class_halves(i, j));
  return g;
}

WeightedGraph BlowupStructure::blow_up() const {
  std::vector<int> cls;
  for (int i = 0; i < m(); ++i) cls.insert(cls.end(), a_sizes[i], i);
  WeightedGraph g(static_cast<int>(cls.size()));
  for (std::size_t u = 0; u < cls.size(); ++u)
    for (std::size_t v = u + 1; v < cls.size(); ++v)
      g.set_halves(static_cast<int>(u), static_cast<int>(v), class_halves(cls[u], cls[v]));
  return g;
}

int64_t BlowupStructure::edge_halves() const {
  int64_t s = 0;
  for (int i = 0; i < m(); ++i)
    for (int j = i + 1; j < m(); ++j) s += int64_t{a_sizes[i]} * a_sizes[j] * class_halves(i, j);
  return s;
}

int64_t BlowupStructure::triangle_eighths() const {
  int64_t s = 0;
  for (int i = 0; i < m(); ++i)
    for (int j = i + 1; j < m(); ++j)
      for (int k = j + 1; k < m(); ++k)
        s += int64_t{a_sizes[i]} * a_sizes[j] * a_sizes[k] * class_halves(i, j) * class_halves(j, k) *
             class_halves(i, k);
  return s;
}

int BlowupStructure::weighted_clique_number() const { return rtlab::weighted_clique_number(class_graph()); }

void BlowupStructure::canonicalize() {
  if (a_sizes.size() != b_of.size()) throw precondition_error("InvalidStructure", "size/membership mismatch");
  std::vector<int> order;
  for (int i = 0; i < m(); ++i) {
    if (a_sizes[i] < 0 || b_of[i] < 0) throw precondition_error("InvalidStructure", "negative entry");
    if (a_sizes[i] > 0) order.push_back(i);
  }
  std::map<int, int> renumber;
  for (int i : order)
    if (!renumber.count(b_of[i])) renumber.emplace(b_of[i], static_cast<int>(renumber.size()));
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return renumber[b_of[a]] < renumber[b_of[b]]; });
  BlowupStructure out;
  for (int i : order) {
    out.a_sizes.push_back(a_sizes[i]);
    out.b_of.push_back(renumber[b_of[i]]);
  }
  *this = std::move(out);
}

namespace {

// Class partition under "weight 0 or same vertex"; empty if not an
// equivalence with class-constant weights.
bool zero_classes(const WeightedGraph& g, std::vector<int>& cls) {
  const int n = g.n();
  cls.assign(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (cls[v] >= 0) continue;
    cls[v] = next;
    for (int u = v + 1; u < n; ++u)
      if (g.halves(u, v) == 0) {
        if (cls[u] >= 0) return false;
        cls[u] = next;
      }
    ++next;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if ((cls[u] == cls[v]) != (g.halves(u, v) == 0)) return false;
    }
  return true;
}

}  // namespace

bool is_normal_form(const WeightedGraph& g) {
  std::vector<int> cls;
  if (!zero_classes(g, cls)) return false;
  const int n = g.n();
  // Same-class rows must agree, and "weight <= 1/2" must be an equivalence.
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v || cls[u] != cls[v]) continue;
      for (int k = 0; k < n; ++k)
        if (k != u && k != v && g.halves(u, k) != g.halves(v, k)) return false;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (a == b || b == c || a == c) continue;
        if (g.halves(a, b) <= 1 && g.halves(b, c) <= 1 && g.halves(a, c) == 2) return false;
      }
  return true;
}

BlowupStructure structure_of(const WeightedGraph& g) {
  if (!is_normal_form(g)) throw precondition_error("NotNormalized", "graph is not a normal-form blow-up");
  std::vector<int> cls;
  zero_classes(g, cls);
  int m = 0;
  std::vector<int> rep;
  for (int v = 0; v < g.n(); ++v)
    if (cls[v] == m) {
      rep.push_back(v);
      ++m;
    }
  BlowupStructure s;
  s.a_sizes.assign(m, 0);
  for (int c : cls) ++s.a_sizes[c];
  s.b_of.assign(m, -1);
  int nb = 0;
  for (int i = 0; i < m; ++i) {
    if (s.b_of[i] >= 0) continue;
    s.b_of[i] = nb;
    for (int j = i + 1; j < m; ++j)
      if (g.halves(rep[i], rep[j]) == 1) s.b_of[j] = nb;
    ++nb;
  }
  return s;
}

// ---------------------------------------------------------------------------

WeightedGraph s1_step(const WeightedGraph& g, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= g.n() || j >= g.n())
    throw precondition_error("InvalidArgument", "s1_step needs two distinct vertices");
  if (g.halves(i, j) != 0) throw precondition_error("PairInHalfGraph", "w(v_i, v_j) must be 0");
  WeightedGraph out = g;
  for (int k = 0; k < g.n(); ++k)
    if (k != i && k != j) out.set_halves(j, k, g.halves(i, k));
  return out;
}

S1Result run_s1(const WeightedGraph& g, bool audit_wcn) {
  const int n = g.n();
  S1Result res;
  res.graph = g;
  std::vector<int> group(n);
  std::iota(group.begin(), group.end(), 0);
  WeightedGraph& cur = res.graph;

  while (true) {
    int x = -1;
    int64_t best_t = -1;
    std::vector<int64_t> tv(n);
    for (int v = 0; v < n; ++v) tv[v] = vertex_triangle_eighths(cur, v);
    for (int v = 0; v < n; ++v) {
      bool has_partner = false;
      for (int u = 0; u < n && !has_partner; ++u)
        has_partner = u != v && group[u] != group[v] && cur.halves(u, v) == 0;
      if (has_partner && tv[v] > best_t) {
        best_t = tv[v];
        x = v;
      }
    }
    if (x < 0) break;
    int y = -1;
    for (int u = 0; u < n && y < 0; ++u)
      if (u != x && group[u] != group[x] && cur.halves(u, x) == 0) y = u;
    const int gy = group[y];
    for (int member = 0; member < n; ++member) {
      if (group[member] != gy) continue;
      StepRecord rec{"s1", x, member, triangle_sum_eighths_serial(cur), 0, 0, 0};
      if (audit_wcn) rec.wcn_before = weighted_clique_number(cur);
      cur = s1_step(cur, x, member);
      rec.t_after = triangle_sum_eighths_serial(cur);
      if (audit_wcn) rec.wcn_after = weighted_clique_number(cur);
      res.log.push_back(rec);
    }
    for (int v = 0; v < n; ++v)
      if (group[v] == gy) group[v] = group[x];
  }

  std::map<int, std::vector<int>> by_group;
  for (int v = 0; v < n; ++v) by_group[group[v]].push_back(v);
  for (auto& [id, members] : by_group) res.classes.push_back(members);
  std::sort(res.classes.begin(), res.classes.end());
  return res;
}

namespace {

// Class-level weight matrix of a post-S_1 graph; throws NotNormalized.
std::vector<std::vector<int>> class_weights(const WeightedGraph& g, const std::vector<std::vector<int>>& classes) {
  const int m = static_cast<int>(classes.size());
  std::vector<int> owner(g.n(), -1);
  for (int c = 0; c < m; ++c)
    for (int v : classes[c]) {
      if (v < 0 || v >= g.n() || owner[v] >= 0) throw precondition_error("NotNormalized", "classes overlap");
      owner[v] = c;
    }
  for (int v = 0; v < g.n(); ++v)
    if (owner[v] < 0) throw precondition_error("NotNormalized", "classes do not cover V");
  std::vector<std::vector<int>> w(m, std::vector<int>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (classes[a].empty() || classes[b].empty()) throw precondition_error("NotNormalized", "empty class");
      int h = a == b ? 0 : g.halves(classes[a][0], classes[b][0]);
      for (int u : classes[a])
        for (int v : classes[b])
          if (u != v && g.halves(u, v) != h)
            throw precondition_error("NotNormalized", "weights are not constant between classes");
      if (a != b && h == 0) throw precondition_error("NotNormalized", "zero weight between distinct classes");
      w[a][b] = h;
    }
  return w;
}

}  // namespace

WeightedGraph s2_step(const WeightedGraph& g, const std::vector<std::vector<int>>& classes, int i, int j) {
  auto w = class_weights(g, classes);
  const int m = static_cast<int>(classes.size());
  if (i == j || i < 0 || j < 0 || i >= m || j >= m)
    throw precondition_error("InvalidArgument", "s2_step needs two distinct classes");
  if (w[i][j] != 1) throw precondition_error("PairNotHalf", "w(A_i, A_j) must be 1/2");
  WeightedGraph out = g;
  for (int k = 0; k < m; ++k) {
    if (k == i || k == j) continue;
    for (int a : classes[j])
      for (int b : classes[k]) out.set_halves(a, b, w[i][k]);
  }
  return out;
}

S2Result run_s2(const WeightedGraph& g, const std::vector<std::vector<int>>& classes, bool audit_wcn) {
  auto w = class_weights(g, classes);
  const int m = static_cast<int>(classes.size());
  S2Result res;
  res.graph = g;
  res.a_classes = classes;
  std::vector<int> group(m);
  std::iota(group.begin(), group.end(), 0);

  auto copy_onto_group = [&](const WeightedGraph& start, int src, int target_group) {
    WeightedGraph out = start;
    for (int c = 0; c < m; ++c)
      if (group[c] == target_group) out = s2_step(out, classes, src, c);
    return out;
  };

  while (true) {
    int pi = -1, pj = -1;
    w = class_weights(res.graph, classes);
    for (int i = 0; i < m && pi < 0; ++i)
      for (int j = i + 1; j < m; ++j) {
        if (group[i] != group[j] && w[i][j] == 1) {
          pi = i;
          pj = j;
          break;
        }
      }
    if (pi < 0) break;
    StepRecord rec{"s2", pi, pj, triangle_sum_eighths_serial(res.graph), 0, 0, 0};
    if (audit_wcn) rec.wcn_before = weighted_clique_number(res.graph);
    WeightedGraph forward = copy_onto_group(res.graph, pi, group[pj]);
    WeightedGraph backward = copy_onto_group(res.graph, pj, group[pi]);
    int64_t tf = triangle_sum_eighths_serial(forward), tb = triangle_sum_eighths_serial(backward);
    if (tb > tf) {
      res.graph = std::move(backward);
      rec.i = pj;
      rec.j = pi;
    } else {
      res.graph = std::move(forward);
    }
    rec.t_after = std::max(tf, tb);
    if (audit_wcn) rec.wcn_after = weighted_clique_number(res.graph);
    if (rec.t_after < rec.t_before) ++res.t_decreases;
    res.log.push_back(rec);
    const int gi = group[pi], gj = group[pj];
    for (int c = 0; c < m; ++c)
      if (group[c] == gj) group[c] = gi;
  }

  std::map<int, std::vector<int>> by_group;
  for (int c = 0; c < m; ++c) by_group[group[c]].push_back(c);
  for (auto& [id, members] : by_group) res.b_classes.push_back(members);
  std::sort(res.b_classes.begin(), res.b_classes.end());
  return res;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> balanced_ascending(int u, int parts) {
  std::vector<int> out(parts, u / parts);
  for (int i = 0; i < u % parts; ++i) ++out[parts - 1 - i];
  return out;
}

using Groups = std::vector<std::vector<int>>;  // A sizes per B

Groups groups_of(const BlowupStructure& s) {
  Groups out(s.m_prime());
  for (int i = 0; i < s.m(); ++i) out[s.b_of[i]].push_back(s.a_sizes[i]);
  return out;
}

BlowupStructure from_groups(const Groups& groups) {
  BlowupStructure s;
  for (std::size_t b = 0; b < groups.size(); ++b)
    for (int size : groups[b]) {
      s.a_sizes.push_back(size);
      s.b_of.push_back(static_cast<int>(b));
    }
  s.canonicalize();
  return s;
}

// Replaces the B's in `old_bs` by `fresh`, placed where the first of them was.
BlowupStructure replace_groups(const BlowupStructure& s, const std::vector<int>& old_bs, const Groups& fresh) {
  Groups g = groups_of(s);
  Groups out;
  for (int b = 0; b < static_cast<int>(g.size()); ++b) {
    if (b == old_bs[0])
      out.insert(out.end(), fresh.begin(), fresh.end());
    else if (std::find(old_bs.begin(), old_bs.end(), b) == old_bs.end())
      out.push_back(g[b]);
  }
  return from_groups(out);
}

// e(U), T(U) for U = union of the given B's.
std::pair<int64_t, int64_t> inner_counts(const BlowupStructure& s, const std::vector<int>& bs) {
  std::vector<int> cls;
  for (int i = 0; i < s.m(); ++i)
    if (std::find(bs.begin(), bs.end(), s.b_of[i]) != bs.end()) cls.push_back(i);
  int64_t e = 0, t = 0;
  for (std::size_t a = 0; a < cls.size(); ++a)
    for (std::size_t b = a + 1; b < cls.size(); ++b) {
      int i = cls[a], j = cls[b];
      e += int64_t{s.a_sizes[i]} * s.a_sizes[j] * s.class_halves(i, j);
      for (std::size_t c = b + 1; c < cls.size(); ++c) {
        int k = cls[c];
        t += int64_t{s.a_sizes[i]} * s.a_sizes[j] * s.a_sizes[k] * s.class_halves(i, j) * s.class_halves(j, k) *
             s.class_halves(i, k);
      }
    }
  return {e, t};
}

int group_total(const Groups& g, int b) { return std::accumulate(g[b].begin(), g[b].end(), 0); }

}  // namespace

SplitResult apply_splits(const BlowupStructure& input, int t) {
  BlowupStructure s = input;
  s.canonicalize();
  if (s.weighted_clique_number() >= t)
    throw precondition_error("InvalidStructure", "structure already has a weighted clique of size t");
  SplitResult res;

  // Returns true if an accepted step was applied.
  auto attempt = [&](const std::string& rule, const std::vector<int>& bs, const Groups& fresh) {
    SplitRecord rec;
    rec.rule = rule;
    rec.b_indices = bs;
    Groups g = groups_of(s);
    for (int b : bs) rec.u += group_total(g, b);
    std::tie(rec.e_u_before, rec.t_u_before) = inner_counts(s, bs);
    rec.t_before = s.triangle_eighths();
    rec.wcn_before = s.weighted_clique_number();
    BlowupStructure next = replace_groups(s, bs, fresh);
    std::vector<int> new_bs(fresh.size());
    std::iota(new_bs.begin(), new_bs.end(), bs[0]);
    std::tie(rec.e_u_after, rec.t_u_after) = inner_counts(next, new_bs);
    rec.t_after = next.triangle_eighths();
    rec.wcn_after = next.weighted_clique_number();
    rec.accepted = rec.t_after >= rec.t_before && rec.wcn_after <= rec.wcn_before;
    res.log.push_back(rec);
    if (rec.accepted) s = std::move(next);
    return rec.accepted;
  };

  bool progress = true;
  while (progress) {
    progress = false;
    Groups g = groups_of(s);
    const int n = s.n();
    for (int b = 0; b < static_cast<int>(g.size()) && !progress; ++b) {
      const int k = static_cast<int>(g[b].size());
      const int u = group_total(g, b);
      if (k >= 5) {
        Groups fresh;
        for (int part : balanced_ascending(u, 3)) fresh.push_back({part});
        progress = attempt("case1", {b}, fresh);
      } else if (k == 4) {
        auto parts = balanced_ascending(u, 3);
        progress = attempt("case2", {b}, {{parts[0], parts[1]}, {parts[2]}});
      } else if (k == 3) {
        if (13 * u <= 12 * n) {
          auto parts = balanced_ascending(u, 2);
          progress = attempt("case3-split", {b}, {{parts[0]}, {parts[1]}});
        } else {
          int other = -1;
          for (int c = 0; c < static_cast<int>(g.size()); ++c)
            if (c != b && g[c].size() <= 2 && (other < 0 || group_total(g, c) < group_total(g, other))) other = c;
          if (other >= 0) {
            Groups fresh;
            for (int part : balanced_ascending(u + group_total(g, other), 3)) fresh.push_back({part});
            std::vector<int> bs = {std::min(b, other), std::max(b, other)};
            progress = attempt("case3-merge", bs, fresh);
          }
        }
      }
    }
    if (progress) continue;
    for (int b = 0; b < static_cast<int>(g.size()) && !progress; ++b) {
      if (g[b].size() != 2) continue;
      for (int c = b + 1; c < static_cast<int>(g.size()) && !progress; ++c) {
        if (g[c].size() != 2) continue;
        Groups fresh;
        for (int part : balanced_ascending(group_total(g, b) + group_total(g, c), 3)) fresh.push_back({part});
        progress = attempt("claim2", {b, c}, fresh);
      }
    }
  }
  res.structure = std::move(s);
  return res;
}

// ---------------------------------------------------------------------------

BlowupStructure canonical_structure(int n, int t) {
  if (t < 4) throw precondition_error("InvalidT", "t must be >= 4");
  if (n < 1) throw precondition_error("InvalidArgument", "n must be >= 1");
  const int ell = t / 2;
  Groups groups;
  if (t % 2 == 1) {
    for (int s : balanced_ascending(n, std::min(ell, n))) groups.push_back({s});
  } else if (ell == 2) {
    groups.push_back({n / 2, n - n / 2});
  } else {
    PartSizePlan plan = optimize_plan(n, t, Objective::Triangles);
    groups.push_back({plan.sizes[0], plan.sizes[1]});
    for (std::size_t i = 2; i < plan.sizes.size(); ++i) groups.push_back({plan.sizes[i]});
  }
  return from_groups(groups);
}

namespace {

constexpr int kExhaustiveMaxN = 8;

void consider(TriangleMaximum& best, const BlowupStructure& s) {
  int64_t v = s.triangle_eighths();
  if (v > best.t_eighths) {
    best.t_eighths = v;
    best.structure = s;
  }
}

void enumerate_exhaustive(int n, int t, TriangleMaximum& best) {
  for (int m = 1; m <= std::min(n, t - 2); ++m) {
    std::vector<int> rgs(m, 0), sizes(m, 0);
    std::function<void(int, int)> compose = [&](int idx, int left) {
      if (idx == m - 1) {
        sizes[idx] = left;
        BlowupStructure s{sizes, rgs};
        consider(best, s);
        return;
      }
      for (int v = 1; v <= left - (m - 1 - idx); ++v) {
        sizes[idx] = v;
        compose(idx + 1, left - v);
      }
    };
    std::function<void(int, int)> partitions = [&](int idx, int blocks) {
      if (idx == m) {
        if (m + blocks <= t - 1) compose(0, n);
        return;
      }
      for (int b = 0; b <= blocks && b < m; ++b) {
        rgs[idx] = b;
        partitions(idx + 1, std::max(blocks, b + 1));
      }
    };
    rgs[0] = 0;
    partitions(1, 1);
  }
}

// Steepest ascent over single-vertex moves, then two-vertex moves.
void hill_climb(BlowupStructure& s) {
  int64_t cur = s.triangle_eighths();
  bool improved = true;
  while (improved) {
    improved = false;
    for (int step = 1; step <= 2 && !improved; ++step) {
      int bp = -1, bq = -1;
      int64_t bv = cur;
      for (int p = 0; p < s.m(); ++p)
        for (int q = 0; q < s.m(); ++q) {
          if (p == q || s.a_sizes[p] - step < 1) continue;
          s.a_sizes[p] -= step;
          s.a_sizes[q] += step;
          int64_t v = s.triangle_eighths();
          s.a_sizes[p] += step;
          s.a_sizes[q] -= step;
          if (v > bv) {
            bv = v;
            bp = p;
            bq = q;
          }
        }
      if (bp >= 0) {
        s.a_sizes[bp] -= step;
        s.a_sizes[bq] += step;
        cur = bv;
        improved = true;
      }
    }
  }
}

void enumerate_shapes(int n, int t, TriangleMaximum& best) {
  // Group sizes as non-increasing integer partitions of m.
  for (int m = 1; m <= std::min(n, t - 2); ++m) {
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int left, int cap) {
      if (left == 0) {
        int mp = static_cast<int>(parts.size());
        if (m + mp > t - 1) return;
        BlowupStructure s;
        auto sizes = balanced_ascending(n, m);
        int idx = 0;
        for (int b = 0; b < mp; ++b)
          for (int c = 0; c < parts[b]; ++c) {
            s.a_sizes.push_back(sizes[idx++]);
            s.b_of.push_back(b);
          }
        hill_climb(s);
        s.canonicalize();
        consider(best, s);
        return;
      }
      for (int p = std::min(left, cap); p >= 1; --p) {
        parts.push_back(p);
        rec(left - p, p);
        parts.pop_back();
      }
    };
    rec(m, m);
  }
}

}  // namespace

TriangleMaximum maximize_weighted_triangles(int n, int t) {
  if (t < 4) throw precondition_error("InvalidT", "t must be >= 4");
  if (n < 1) throw precondition_error("InvalidArgument", "n must be >= 1");
  TriangleMaximum best;
  best.structure = canonical_structure(n, t);
  best.t_eighths = best.structure.triangle_eighths();
  if (n <= kExhaustiveMaxN) {
    enumerate_exhaustive(n, t, best);
    best.exhaustive = true;
  } else {
    enumerate_shapes(n, t, best);
  }
  best.structure.canonicalize();
  return best;
}

}  // namespace rtlab
