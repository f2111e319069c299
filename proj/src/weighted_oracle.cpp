#include <algorithm>
#include <bit>
#include <map>
#include <mutex>

#include "rtlab/census.hpp"

namespace rtlab {

namespace {

constexpr int kMaxN = kWeightedOracleMaxN;

uint64_t pow3(int e) {
  uint64_t out = 1;
  for (int i = 0; i < e; ++i) out *= 3;
  return out;
}

// Evaluates one weight vector: e and T, weighted clique number, and whether
// the zero and <= 1/2 relations are both equivalences.
struct Evaluator {
  int n;
  int pairs;
  std::array<std::pair<int, int>, kMaxN * (kMaxN - 1) / 2> pair{};
  std::array<std::array<int, 3>, 20> triple{};  // pair indices of each triangle
  int triples = 0;

  explicit Evaluator(int n_) : n(n_), pairs(n_ * (n_ - 1) / 2) {
    int p = 0;
    std::array<std::array<int, kMaxN>, kMaxN> id{};
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        pair[p] = {u, v};
        id[u][v] = p++;
      }
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) triple[triples++] = {id[a][b], id[a][c], id[b][c]};
  }

  struct Value {
    int64_t e2;
    int64_t t8;
    int wcn;
    bool nf;
  };

  Value eval(const std::array<uint8_t, 15>& d) const {
    Value out{0, 0, 0, false};
    std::array<uint32_t, kMaxN> half{}, one{}, zero{}, low{};
    for (int p = 0; p < pairs; ++p) {
      auto [u, v] = pair[p];
      out.e2 += d[p];
      if (d[p] >= 1) {
        half[u] |= 1U << v;
        half[v] |= 1U << u;
      }
      if (d[p] == 2) {
        one[u] |= 1U << v;
        one[v] |= 1U << u;
      }
      if (d[p] == 0) {
        zero[u] |= 1U << v;
        zero[v] |= 1U << u;
      }
      if (d[p] <= 1) {
        low[u] |= 1U << v;
        low[v] |= 1U << u;
      }
    }
    for (int x = 0; x < triples; ++x) out.t8 += d[triple[x][0]] * d[triple[x][1]] * d[triple[x][2]];

    // Subset DP: is S a clique of G_1/2, and clique number of G_1[S].
    const uint32_t subsets = 1U << n;
    std::array<uint8_t, 1U << kMaxN> is_half{}, best1{};
    is_half[0] = 1;
    best1[0] = 0;
    for (uint32_t s = 1; s < subsets; ++s) {
      int v = std::countr_zero(s);
      uint32_t rest = s & (s - 1);
      is_half[s] = is_half[rest] && (half[v] & rest) == rest;
      best1[s] = std::max<uint8_t>(best1[rest], 1 + best1[rest & one[v]]);
      if (is_half[s]) out.wcn = std::max(out.wcn, std::popcount(s) + best1[s]);
    }

    bool nf = true;
    for (int u = 0; u < n && nf; ++u)
      for (int v = u + 1; v < n && nf; ++v) {
        uint32_t zu = zero[u] | 1U << u, zv = zero[v] | 1U << v;
        uint32_t lu = low[u] | 1U << u, lv = low[v] | 1U << v;
        if ((zero[u] >> v & 1U) && zu != zv) nf = false;
        if ((low[u] >> v & 1U) && lu != lv) nf = false;
      }
    out.nf = nf;
    return out;
  }
};

void offer(int64_t value, uint64_t index, int64_t& best, uint64_t& arg) {
  if (value > best || (value == best && index < arg)) {
    best = value;
    arg = index;
  }
}

OracleTable empty_table(int n) {
  OracleTable t;
  t.n = n;
  t.best_e2.fill(-1);
  t.best_t8.fill(-1);
  t.nf_e2.fill(-1);
  t.nf_t8.fill(-1);
  return t;
}

void scan_range(const Evaluator& ev, uint64_t lo, uint64_t hi, OracleTable& t) {
  std::array<uint8_t, 15> d{};
  uint64_t x = lo;
  for (int p = 0; p < ev.pairs; ++p) {
    d[p] = static_cast<uint8_t>(x % 3);
    x /= 3;
  }
  for (uint64_t idx = lo; idx < hi; ++idx) {
    auto v = ev.eval(d);
    ++t.count[v.wcn];
    offer(v.e2, idx, t.best_e2[v.wcn], t.arg_e2[v.wcn]);
    offer(v.t8, idx, t.best_t8[v.wcn], t.arg_t8[v.wcn]);
    if (v.nf) {
      offer(v.e2, idx, t.nf_e2[v.wcn], t.nf_arg_e2[v.wcn]);
      offer(v.t8, idx, t.nf_t8[v.wcn], t.nf_arg_t8[v.wcn]);
    }
    for (int p = 0; p < ev.pairs; ++p) {
      if (++d[p] < 3) break;
      d[p] = 0;
    }
  }
}

void merge(OracleTable& into, const OracleTable& from) {
  for (int b = 0; b < OracleTable::kBuckets; ++b) {
    into.count[b] += from.count[b];
    if (from.best_e2[b] >= 0) offer(from.best_e2[b], from.arg_e2[b], into.best_e2[b], into.arg_e2[b]);
    if (from.best_t8[b] >= 0) offer(from.best_t8[b], from.arg_t8[b], into.best_t8[b], into.arg_t8[b]);
    if (from.nf_e2[b] >= 0) offer(from.nf_e2[b], from.nf_arg_e2[b], into.nf_e2[b], into.nf_arg_e2[b]);
    if (from.nf_t8[b] >= 0) offer(from.nf_t8[b], from.nf_arg_t8[b], into.nf_t8[b], into.nf_arg_t8[b]);
  }
}

void check_n(int n) {
  if (n < 1) throw precondition_error("InvalidArgument", "need n >= 1");
  if (n > kMaxN) throw budget_error("BudgetExceeded", "exhaustive weighted oracle is limited to n <= 6");
}

}  // namespace

WeightedGraph oracle_graph(int n, uint64_t index) {
  check_n(n);
  WeightedGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      g.set_halves(u, v, static_cast<int>(index % 3));
      index /= 3;
    }
  return g;
}

OracleTable build_oracle_table_serial(int n) {
  check_n(n);
  Evaluator ev(n);
  OracleTable t = empty_table(n);
  t.graphs = pow3(ev.pairs);
  scan_range(ev, 0, t.graphs, t);
  return t;
}

OracleTable build_oracle_table(int n) {
  check_n(n);
  Evaluator ev(n);
  OracleTable total = empty_table(n);
  total.graphs = pow3(ev.pairs);
  const uint64_t chunk = std::max<uint64_t>(1, total.graphs / 729);
  const int64_t chunks = static_cast<int64_t>((total.graphs + chunk - 1) / chunk);
  std::mutex mu;
#pragma omp parallel
  {
    OracleTable local = empty_table(n);
#pragma omp for schedule(dynamic, 1)
    for (int64_t c = 0; c < chunks; ++c) {
      uint64_t lo = static_cast<uint64_t>(c) * chunk;
      scan_range(ev, lo, std::min(total.graphs, lo + chunk), local);
    }
    std::lock_guard<std::mutex> lock(mu);
    merge(total, local);
  }
  return total;
}

OracleResult weighted_bound_oracle(int n, int k, Quantity quantity) {
  check_n(n);
  if (k < 3) throw precondition_error("InvalidArgument", "need k >= 3");
  static std::mutex cache_mu;
  static std::map<int, OracleTable> cache;
  const OracleTable* table;
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_oracle_table(n)).first;
    table = &it->second;
  }
  const bool edges = quantity == Quantity::Edges;
  const auto& best = edges ? table->best_e2 : table->best_t8;
  const auto& arg = edges ? table->arg_e2 : table->arg_t8;
  const auto& nf_best = edges ? table->nf_e2 : table->nf_t8;
  const auto& nf_arg = edges ? table->nf_arg_e2 : table->nf_arg_t8;

  int64_t top = -1, nf_top = -1;
  uint64_t top_arg = 0, nf_top_arg = 0;
  const int buckets = std::min(k, OracleTable::kBuckets);
  for (int b = 0; b < buckets; ++b) {
    if (best[b] >= 0) offer(best[b], arg[b], top, top_arg);
    if (nf_best[b] >= 0) offer(nf_best[b], nf_arg[b], nf_top, nf_top_arg);
  }
  if (top < 0) throw precondition_error("NoGraph", "no weighted graph has weighted clique number < k");

  const int64_t denom = edges ? 2 : 8;
  OracleResult out;
  out.graphs = table->graphs;
  out.maximum = Rational(top, denom);
  out.normal_form_maximum = Rational(std::max<int64_t>(nf_top, 0), denom);
  out.witness_normal_form = nf_top == top;
  out.witness = oracle_graph(n, out.witness_normal_form ? nf_top_arg : top_arg);
  if (out.witness_normal_form) out.witness_structure = structure_of(out.witness);
  return out;
}

}  // namespace rtlab
