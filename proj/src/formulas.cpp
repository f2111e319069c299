#include "rtlab/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace rtlab {

namespace {

Error out_of_range(const std::string& what) { return precondition_error("OutOfRange", what); }

int64_t choose(int64_t n, int k) {
  if (k < 0 || n < k) return 0;
  int64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

Rational b(int k) {
  if (k < 3) throw out_of_range("b(k) needs k >= 3");
  if (k % 2 == 1) return Rational(k - 3, 2 * (k - 1));
  return Rational(3 * k - 10, 2 * (3 * k - 4));
}

long double a_even_objective(int ell, long double x) {
  const int L = ell - 2;
  const long double y = 1 - x;
  long double out = 0.5L * (x / 2) * (x / 2) * y;
  if (L > 0) {
    long double rest = y / L;
    out += choose(L, 3) * rest * rest * rest + x * choose(L, 2) * rest * rest;
  }
  return out;
}

OptResult a(int t) {
  if (t < 6) throw out_of_range("a(t) needs t >= 6");
  const int ell = t / 2;
  OptResult out;
  if (t % 2 == 1) {
    out.branch = Branch::Odd;
    out.exact = Rational(choose(ell, 3), static_cast<int64_t>(ell) * ell * ell);
    out.value = static_cast<long double>(choose(ell, 3)) / (static_cast<long double>(ell) * ell * ell);
    return out;
  }
  out.branch = Branch::Even;
  // f = al y^3 + be x y^2 + x^2 y / 8 with y = 1 - x; f' = A x^2 + B x + C.
  const int L = ell - 2;
  const long double al = static_cast<long double>(choose(L, 3)) / (static_cast<long double>(L) * L * L);
  const long double be = static_cast<long double>(choose(L, 2)) / (static_cast<long double>(L) * L);
  const long double A = -3 * al + 3 * be - 0.375L;
  const long double B = 6 * al - 4 * be + 0.25L;
  const long double C = -3 * al + be;
  std::vector<long double> candidates{0, 1};
  if (std::fabs(A) < 1e-18L) {
    if (std::fabs(B) > 1e-18L) candidates.push_back(-C / B);
  } else {
    long double disc = B * B - 4 * A * C;
    if (disc >= 0) {
      long double s = std::sqrt(disc);
      candidates.push_back((-B + s) / (2 * A));
      candidates.push_back((-B - s) / (2 * A));
    }
  }
  out.value = -1;
  for (long double x : candidates) {
    if (x < 0 || x > 1) continue;
    long double v = a_even_objective(ell, x);
    if (v > out.value) {
      out.value = v;
      out.argmax_x = x;
    }
  }

  const int steps = 1000;
  int best = 0;
  for (int i = 1; i <= steps; ++i)
    if (a_even_objective(ell, static_cast<long double>(i) / steps) >
        a_even_objective(ell, static_cast<long double>(best) / steps))
      best = i;
  long double lo = std::max<long double>(0, (best - 1.0L) / steps);
  long double hi = std::min<long double>(1, (best + 1.0L) / steps);
  for (int it = 0; it < 300 && hi - lo > 1e-15L; ++it) {
    long double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
    if (a_even_objective(ell, m1) < a_even_objective(ell, m2))
      lo = m1;
    else
      hi = m2;
  }
  out.ternary_x = (lo + hi) / 2;
  out.ternary_value = a_even_objective(ell, out.ternary_x);
  return out;
}

Rational rf_exponent(int k) {
  if (k < 3) throw out_of_range("rf_exponent(k) needs k >= 3");
  if (k == 3) return Rational(0);
  const int t = (k - 1) / 3;
  const int i = k - 3 * t;
  return b(4 * t + i);
}

Rational rt_clique_coefficient(int s) {
  if (s < 3) throw out_of_range("rt_clique_coefficient(s) needs s >= 3");
  BigInt den = BigInt(1) << (s * (s - 1) / 2);
  for (int i = 0; i < s; ++i) den *= s;
  return Rational(BigInt(1), den);
}

double g_threshold(int r, double n, double omega) {
  if (r < 2) throw out_of_range("g_threshold needs r >= 2");
  if (!(n >= 2)) throw out_of_range("g_threshold needs n >= 2");
  if (!(omega > 0)) throw out_of_range("g_threshold needs omega > 0");
  return n * std::exp2(-omega * std::pow(std::log2(n), 1.0 - 1.0 / r));
}

}  // namespace rtlab
