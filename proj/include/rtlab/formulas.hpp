#pragma once

#include <optional>
#include <string>

#include "rtlab/common.hpp"

namespace rtlab {

/// Edge-density constant: (k-3)/(2(k-1)) for odd k, (3k-10)/(2(3k-4)) for
/// even k. Throws OutOfRange for k < 3.
Rational b(int k);

enum class Branch { Odd, Even };

struct OptResult {
  long double value = 0;
  long double argmax_x = 0;  ///< 0 on the odd branch
  Branch branch = Branch::Odd;
  std::optional<Rational> exact;  ///< odd branch only
  long double ternary_x = 0;      ///< independent ternary-search argmax (even branch)
  long double ternary_value = 0;
};

/// Triangle-density constant for K_t-free graphs with ell = floor(t/2).
/// Odd t: C(ell,3)/ell^3. Even t: maximum over x in [0,1] of the cubic
///   C(L,3)((1-x)/L)^3 + x C(L,2)((1-x)/L)^2 + (1/2)(x/2)^2 (1-x),  L = ell-2,
/// found from the roots of its derivative. Throws OutOfRange for t < 6.
OptResult a(int t);

/// The even-branch cubic above, for cross-checks.
long double a_even_objective(int ell, long double x);

/// 0 for k = 3, otherwise b(4t+i) where k = 3t+i with i in {1,2,3}.
Rational rf_exponent(int k);

/// 2^{-C(s,2)} / s^s. Throws OutOfRange for s < 3.
Rational rt_clique_coefficient(int s);

/// n 2^{-omega (log2 n)^{1-1/r}}. Throws OutOfRange on r < 2, n < 2 or
/// omega <= 0.
double g_threshold(int r, double n, double omega);

}  // namespace rtlab
