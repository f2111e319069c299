#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rtlab/constructions.hpp"
#include "rtlab/graph.hpp"
#include "rtlab/symmetrize.hpp"
#include "rtlab/weighted.hpp"

namespace rtlab {

// ---------------------------------------------------------------------------
// Edge colorings

/// Colors 1..r, one per edge of the host graph in Graph::edges() order.
struct EdgeColoring {
  int r = 2;
  std::vector<int> color;
};

/// Builds a coloring from (u, v, color) triples; every edge must be colored
/// exactly once. Throws BadColoring.
EdgeColoring coloring_from_triples(const Graph& g, int r, const std::vector<std::array<int, 3>>& triples);

/// Spanning subgraph formed by the edges of color c.
Graph color_graph(const Graph& g, const EdgeColoring& coloring, int c);

// ---------------------------------------------------------------------------
// Census

enum class CensusMode { Exhaustive, InclusionExclusion, Sample };

inline constexpr double kCensusLog2Budget = 40.0;

struct CensusResult {
  std::string graph;
  int r = 0;
  int k = 0;
  int64_t edges = 0;
  BigInt valid;
  BigInt total;         ///< r^e
  double log2_valid = 0;
  bool exact = true;    ///< false in sample mode
  double fraction = 0;  ///< valid / total
  int64_t samples = 0;
};

/// Number of r-colorings of the edges of g with no monochromatic K_k.
/// Exhaustive mode: depth-first search over edges in most-constrained-first
/// order with pruning on monochromatic cliques; color prefixes are split
/// across OpenMP threads. Requires r^e <= 2^40 (BudgetExceeded otherwise).
/// InclusionExclusion: independent oracle over subsets of the K_k list (at
/// most 25 cliques). Sample: Monte Carlo estimate from `samples` colorings.
CensusResult count_valid_colorings(const Graph& g, int r, int k, CensusMode mode = CensusMode::Exhaustive,
                                   int64_t samples = 100000, uint64_t seed = 1);
/// Single-threaded reference for the exhaustive search.
BigInt count_valid_colorings_serial(const Graph& g, int r, int k);

/// log2 of r^e, the size of the exhaustive search space.
double census_log2_space(const Graph& g, int r);

struct CensusMaximum {
  Graph graph;
  BigInt valid;
  int graphs_scanned = 0;  ///< isomorphism classes considered
};

/// Maximizes the census over all graphs on n <= 7 vertices up to
/// isomorphism, optionally restricted to alpha(G) <= alpha_max. Ties go to
/// the smallest canonical code.
CensusMaximum max_census_over_graphs(int n, int r, int k, std::optional<int> alpha_max = std::nullopt);

/// Canonical form: the relabelling whose upper-triangle bit code is smallest.
Graph canonical_graph(const Graph& g);
/// Non-isomorphic graphs on n <= 7 vertices, sorted by canonical code.
std::vector<Graph> all_graphs_up_to_isomorphism(int n);

// ---------------------------------------------------------------------------
// Partition procedure

struct PartitionResult {
  std::vector<VertexSet> parts;  ///< C_1..C_r
  int rounds = 0;                ///< top-level stripping rounds
  std::vector<int> alpha;        ///< alpha(G_{c_i}[C_i]), exact
  int alpha_g = 0;
  double threshold = 0;  ///< c n
  bool ok() const;
};

/// Splits V into C_1..C_r with alpha(G_{c_i}[C_i]) <= c n. Color 1 strips
/// lexicographically smallest maximum independent sets while its own
/// independence number exceeds the threshold; each stripped set is split
/// recursively among the remaining colors. Requires
/// alpha(G) <= c^{3 2^{r-2} - 1} n (PreconditionViolated otherwise).
PartitionResult partition_by_colors(const Graph& g, const EdgeColoring& coloring, double c);

/// c^{3 2^{r-2} - 1}.
double partition_alpha_fraction(int r, double c);

// ---------------------------------------------------------------------------
// Lower-bound coloring families

struct ColoringFamily {
  int r = 2;
  int forbidden = 0;                       ///< no monochromatic K_forbidden
  std::vector<std::pair<int, int>> edges;  ///< Graph::edges() order
  std::vector<int> fixed;                  ///< color per edge, 0 when free
  std::vector<int> palette;                ///< colors allowed on free edges
  int64_t free_edges = 0;
  double log2_size() const;
  BigInt size() const;
};

/// Fixed inner colors per the i-case rules on H(n, 4t+i): i = 1 colors parts
/// 1..t red and t+1..2t blue; i = 2 colors parts 1..t+1 red and the rest
/// blue; i = 3 colors parts 1..t red and t+1..2t+1 blue. Edges between parts
/// (BE cross edges included) are free in {red, blue}. Throws BadFamily.
ColoringFamily generate_lower_bound_family(int t, int i, const PartitionedGraph& g);

/// Three colors on H(n,5): inner edges red (1), cross edges green (2) or
/// blue (3); forbidden K_3.
ColoringFamily rf33_family(const PartitionedGraph& g);

struct FamilyValidation {
  int samples = 0;
  int failures = 0;
  int max_mono_clique = 0;
  std::vector<int> witness_coloring;  ///< first failing sample, if any
  std::vector<int> witness_clique;
};

/// Samples random completions of the free edges and checks each color class
/// for K_forbidden. Samples run in parallel; sample s uses its own seed, so
/// the result does not depend on the thread count.
FamilyValidation validate_family(const Graph& g, const ColoringFamily& family, int samples, uint64_t seed);

// ---------------------------------------------------------------------------
// Exhaustive weighted oracle

enum class Quantity { Edges, Triangles };

inline constexpr int kWeightedOracleMaxN = 6;

struct OracleResult {
  Rational maximum;
  WeightedGraph witness;
  bool witness_normal_form = false;
  Rational normal_form_maximum;  ///< largest value over normal-form graphs
  std::optional<BlowupStructure> witness_structure;
  uint64_t graphs = 0;
};

/// Maximum of e(G) or T(G) over all 3^{C(n,2)} weighted graphs on n <= 6
/// vertices with weighted clique number < k. The witness is a normal-form
/// graph whenever one attains the maximum, else the first maximizer in
/// enumeration order. Throws BudgetExceeded for n > 6.
OracleResult weighted_bound_oracle(int n, int k, Quantity quantity);

/// Per-wcn table behind the oracle: best value and witness index for each
/// weighted clique number, overall and over normal forms.
struct OracleTable {
  int n = 0;
  uint64_t graphs = 0;
  static constexpr int kBuckets = 2 * kWeightedOracleMaxN + 1;
  std::array<int64_t, kBuckets> best_e2{}, best_t8{}, nf_e2{}, nf_t8{};
  std::array<uint64_t, kBuckets> arg_e2{}, arg_t8{}, nf_arg_e2{}, nf_arg_t8{};
  std::array<uint64_t, kBuckets> count{};
};

OracleTable build_oracle_table(int n);
OracleTable build_oracle_table_serial(int n);
WeightedGraph oracle_graph(int n, uint64_t index);

}  // namespace rtlab
