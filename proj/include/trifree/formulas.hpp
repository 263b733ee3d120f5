#pragma once

#include <utility>

#include "trifree/rational.hpp"

namespace trifree {

// Which branch of the piecewise extremal formula an (n, s) pair falls in.
enum class RangeKind { BelowThird, KRange, AtOrAboveHalf };

struct RangeIndex {
  RangeKind kind = RangeKind::BelowThird;
  int k = 0;  // meaningful for KRange only
};

// Quadratic k-range value; exact integer for every k >= 2.
long long g_k_value(int k, long long n, long long s);

// Classification by cross-multiplication: s <= n/3, the unique k >= 2 with
// kn/(3k-1) <= s < (k-1)n/(3k-4), or s >= n/2.
RangeIndex range_index(long long n, long long s);

// The piecewise bound: ns/2 below a third, g_k in range k, floor(n^2/4)
// from a half on. Half-integral in the first branch, hence rational.
Rational g_value(long long n, long long s);

// Density form on (0,1]; same three branches with
// f_k(a) = k(k-1) - 2k(3k-4)a + (3k-4)(3k-1)a^2.
Rational f_conjectured(Rational alpha);

long long trivial_bound(long long n, long long s);        // floor(ns/2)
Rational trivial_bound_rational(long long n, long long s);  // ns/2
long long mantel_bound(long long n);                      // floor(n^2/4)

// Both sides of the algebraic identity behind the out-of-range bound:
// 2 g_k(n,s) - ns versus (kn-(3k-1)s)((k-1)n-(3k-4)s). Equal for all inputs.
std::pair<long long, long long> fact26_identity(int k, long long n, long long s);

// One row of the formula tables emitted by the CLI.
struct FormulaPoint {
  long long n = 0;
  long long s = 0;
  RangeIndex range;
  Rational g;
  long long g_floor = 0;
  long long trivial = 0;
  long long mantel = 0;
};

FormulaPoint formula_point(long long n, long long s);

}  // namespace trifree
