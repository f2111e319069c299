#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rtlab/weighted.hpp"

namespace rtlab {

/// Blow-up in normal form: classes A_1..A_m of zero inner weight, grouped
/// into B_1..B_m'. Classes in the same B are joined at weight 1/2, classes in
/// different B's at weight 1.
struct BlowupStructure {
  std::vector<int> a_sizes;
  std::vector<int> b_of;  ///< B index of each A class

  int m() const { return static_cast<int>(a_sizes.size()); }
  int m_prime() const;
  int n() const;
  /// Class-level weight in halves (0 on the diagonal).
  int class_halves(int i, int j) const { return i == j ? 0 : (b_of[i] == b_of[j] ? 1 : 2); }
  std::vector<std::vector<int>> b_members() const;

  /// Weighted graph on the m classes.
  WeightedGraph class_graph() const;
  /// Weighted graph on n vertices, classes laid out consecutively.
  WeightedGraph blow_up() const;

  int64_t edge_halves() const;
  int64_t triangle_eighths() const;
  Rational triangles() const { return Rational(triangle_eighths(), 8); }
  /// m + m' when every class is nonempty.
  int weighted_clique_number() const;

  /// Sorts classes by B, renumbers B's by first appearance, drops empty
  /// classes. Throws InvalidStructure on malformed input.
  void canonicalize();
};

/// Reads the normal form off a weighted graph, or throws NotNormalized.
BlowupStructure structure_of(const WeightedGraph& g);
bool is_normal_form(const WeightedGraph& g);

/// One audited step of the engine.
struct StepRecord {
  std::string op;
  int i = -1, j = -1;
  int64_t t_before = 0, t_after = 0;  ///< eighths
  int wcn_before = 0, wcn_after = 0;
};

/// S_1(i,j): vertex j becomes a copy of vertex i. Requires w(i,j) = 0
/// (PairInHalfGraph otherwise). T changes by T_i - T_j.
WeightedGraph s1_step(const WeightedGraph& g, int i, int j);

struct S1Result {
  WeightedGraph graph;
  std::vector<std::vector<int>> classes;  ///< the A classes, sorted
  std::vector<StepRecord> log;
};

/// Repeatedly takes the vertex x of largest T_x (ties: lowest index) that has
/// a zero-weight partner in another class and copies x onto every vertex of
/// that partner's class, then merges the two classes. Every copy moves onto a
/// vertex of no larger T, so T never decreases; at most n - 1 merges.
S1Result run_s1(const WeightedGraph& g, bool audit_wcn = true);

/// S_2(i,j) on classes: class j takes the outward weights of class i. The
/// companion G_{A_j} is s2_step(g, classes, j, i). Requires w(A_i,A_j) = 1/2
/// (PairNotHalf otherwise).
WeightedGraph s2_step(const WeightedGraph& g, const std::vector<std::vector<int>>& classes, int i, int j);

struct S2Result {
  WeightedGraph graph;
  std::vector<std::vector<int>> a_classes;
  std::vector<std::vector<int>> b_classes;  ///< lists of A-class indices
  std::vector<StepRecord> log;
  int t_decreases = 0;  ///< steps where neither direction kept T
};

/// Class-level analogue of run_s1 over pairs at weight 1/2, taking for each
/// merge the copy direction with the larger resulting T. Input must be in
/// post-S_1 form (NotNormalized otherwise).
S2Result run_s2(const WeightedGraph& g, const std::vector<std::vector<int>>& classes, bool audit_wcn = true);

struct SplitRecord {
  std::string rule;  ///< case1, case2, case3-split, case3-merge, claim2
  std::vector<int> b_indices;
  int u = 0;
  int64_t e_u_before = 0, e_u_after = 0;  ///< halves
  int64_t t_u_before = 0, t_u_after = 0;  ///< eighths
  int64_t t_before = 0, t_after = 0;      ///< eighths, whole graph
  int wcn_before = 0, wcn_after = 0;
  bool accepted = false;
};

struct SplitResult {
  BlowupStructure structure;
  std::vector<SplitRecord> log;
};

/// Applies the splitting cases to a fixpoint. A step is kept only when total
/// T does not decrease and the weighted clique number does not increase;
/// rejected steps are logged. t is the forbidden weighted clique size and is
/// checked on the input (wcn < t).
SplitResult apply_splits(const BlowupStructure& s, int t);

struct TriangleMaximum {
  BlowupStructure structure;
  int64_t t_eighths = 0;
  Rational value() const { return Rational(t_eighths, 8); }
  bool exhaustive = false;  ///< sizes enumerated exhaustively (small n)
};

/// Largest T over normal-form blow-ups on n vertices with m + m' <= t - 1.
/// The conjectured extremal shape (balanced classes at weight 1 for odd t; B_1 = A_1 u A_2
/// plus singleton B's for even t) is the incumbent and is replaced only by a
/// strictly better structure. Throws InvalidT for t < 4.
TriangleMaximum maximize_weighted_triangles(int n, int t);

/// The conjectured extremal shape for (n, t).
BlowupStructure canonical_structure(int n, int t);

}  // namespace rtlab
