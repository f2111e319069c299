#pragma once

#include <string>
#include <vector>

namespace rtlab {

/// Pinned tolerances for the desk acceptance suite.
namespace tol {
inline constexpr double kArgmaxX = 1e-6;
inline constexpr double kCrossDensityLo = 0.40;
inline constexpr double kCrossDensityHi = 0.60;
inline constexpr double kInnerEdgeFraction = 0.02;  ///< of n^2
inline constexpr double kK7TriangleRel = 0.15;
inline constexpr double kK6TriangleRel = 0.25;
inline constexpr double kEdgeBoundSlack = 0.15;
}  // namespace tol

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kAcceptanceCriteria = 10;

/// Runs criterion 1..10. Never throws; errors become a failed result.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance_suite();

/// "PASS [n] title (1.23 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace rtlab
