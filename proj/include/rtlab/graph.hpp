#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rtlab/common.hpp"

namespace rtlab {

inline constexpr int kMaxVertices = 4096;
inline constexpr int kDefaultExactCap = 60;

/// Fixed-universe bitset over vertices 0..n-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}
  VertexSet(int universe, std::initializer_list<int> members);
  VertexSet(int universe, std::span<const int> members);

  static VertexSet full(int universe);

  int universe() const noexcept { return n_; }
  bool test(int v) const noexcept { return (w_[v >> 6] >> (v & 63)) & 1U; }
  void set(int v) noexcept { w_[v >> 6] |= uint64_t{1} << (v & 63); }
  void reset(int v) noexcept { w_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }

  int count() const noexcept;
  bool empty() const noexcept;
  /// Smallest member, or -1.
  int first() const noexcept;
  /// Smallest member strictly greater than v, or -1.
  int next(int v) const noexcept;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      uint64_t word = w_[i];
      while (word) {
        int b = std::countr_zero(word);
        f(static_cast<int>(i * 64 + b));
        word &= word - 1;
      }
    }
  }

  std::vector<int> to_vector() const;
  std::span<const uint64_t> words() const noexcept { return w_; }
  std::span<uint64_t> words() noexcept { return w_; }

  /// In-place intersection with a raw adjacency row of the same universe.
  void intersect(std::span<const uint64_t> row) noexcept;
  /// Drops every member <= v.
  void keep_above(int v) noexcept;
  /// Number of members after intersecting with row, without materializing.
  int count_and(std::span<const uint64_t> row) const noexcept;

  VertexSet complement() const;

  VertexSet& operator&=(const VertexSet& o) noexcept;
  VertexSet& operator|=(const VertexSet& o) noexcept;
  VertexSet& operator-=(const VertexSet& o) noexcept;
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

/// Dense undirected simple graph with bit-row adjacency.
///
/// Rows are mutable only through add_edge/remove_edge, which keep the
/// adjacency symmetric and irreflexive. Once handed to an algorithm a graph
/// is treated as immutable and may be read concurrently.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Builds from n rows of ceil(n/64) words each; throws InvalidGraph unless
  /// the rows are symmetric and irreflexive.
  static Graph from_rows(int n, std::vector<uint64_t> rows);

  int n() const noexcept { return n_; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool adjacent(int u, int v) const noexcept {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  std::span<const uint64_t> row(int v) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }
  VertexSet neighbors(int v) const;
  int degree(int v) const noexcept;
  int64_t edge_count() const noexcept;
  /// Edges (u < v) in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
  Graph complement() const;
  /// Subgraph induced on `within`, relabelled in increasing vertex order.
  Graph induced(const VertexSet& within) const;
  /// Edges with one end in a and the other in b (a, b disjoint).
  int64_t edges_between(const VertexSet& a, const VertexSet& b) const;
  /// Edges with both ends in a.
  int64_t edges_within(const VertexSet& a) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;
};

// Named graphs used by tests and CLI recipes.
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// Balanced complete r-partite graph (part sizes differ by at most one).
Graph turan_graph(int n, int r);
/// Part index of each vertex in turan_graph(n, r).
std::vector<int> turan_parts(int n, int r);

/// Resolves "K5", "C5", "P4", "E4" (empty) and "T9,3" / "T9_3".
/// Throws Error(Precondition, "UnknownGraph") otherwise.
Graph named_graph(std::string_view name);
bool is_named_graph(std::string_view name);

// ---------------------------------------------------------------------------
// Cliques

/// Exact number of s-vertex complete subgraphs. Outer vertex loop is split
/// across OpenMP threads.
uint64_t count_cliques(const Graph& g, int s);
/// Single-threaded reference for count_cliques.
uint64_t count_cliques_serial(const Graph& g, int s);

/// Every s-clique as a sorted vertex list, in lexicographic order.
std::vector<std::vector<int>> list_cliques(const Graph& g, int s);

struct CliqueFreeResult {
  bool clique_free = true;
  std::vector<int> witness;  ///< k vertices of a K_k when clique_free is false
};

/// True iff g contains no K_k; otherwise returns a witness clique.
CliqueFreeResult is_clique_free(const Graph& g, int k);

/// One maximum clique of g[within].
std::vector<int> max_clique(const Graph& g, const VertexSet& within);
std::vector<int> max_clique(const Graph& g);

// ---------------------------------------------------------------------------
// Independent sets

enum class AlphaMode { Exact, GreedyLower, FractionalUpper };

struct AlphaReport {
  int lower = 0;
  int upper = 0;
  std::vector<int> witness;  ///< independent set of size `lower`
  bool exact() const noexcept { return lower == upper; }
};

/// Exact mode: branch-and-bound on complement cliques, throws
/// ExactCapExceeded above exact_cap vertices. GreedyLower: min-degree greedy
/// witness (upper = n). FractionalUpper: greedy clique cover of g, which
/// bounds alpha from above, together with the greedy witness.
AlphaReport independence_number(const Graph& g, AlphaMode mode = AlphaMode::Exact,
                                 int exact_cap = kDefaultExactCap);

/// Maximum independent set of g[within]; among all maxima returns the one
/// whose sorted vertex sequence is lexicographically smallest.
VertexSet max_independent_set(const Graph& g, const VertexSet& within,
                              int exact_cap = kDefaultExactCap);

/// alpha(g[within]) exactly.
int independence_number_within(const Graph& g, const VertexSet& within,
                               int exact_cap = kDefaultExactCap);

std::vector<int> greedy_independent_set(const Graph& g, const VertexSet& within);

// ---------------------------------------------------------------------------
// Text format: "n m" then one "u v" per line (0-indexed), or DIMACS
// "p edge n m" with "e u v" lines (1-indexed). Comment lines start with 'c'
// or '#'.

std::string to_text(const Graph& g);
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace rtlab
