#include "trifree/formulas.hpp"

#include <stdexcept>

namespace trifree {

long long g_k_value(int k, long long n, long long s) {
  if (k < 2) throw std::invalid_argument("g_k requires k >= 2");
  long long kk = k;
  // k(k-1) is even, and so is (3k-4)(3k-1); both halves are exact integers.
  long long a = kk * (kk - 1) / 2;
  long long b = kk * (3 * kk - 4);
  long long c = (3 * kk - 4) * (3 * kk - 1) / 2;
  return a * n * n - b * n * s + c * s * s;
}

RangeIndex range_index(long long n, long long s) {
  if (s < 0 || s > n) throw std::invalid_argument("need 0 <= s <= n");
  if (3 * s <= n) return {RangeKind::BelowThird, 0};
  if (2 * s >= n) return {RangeKind::AtOrAboveHalf, 0};
  for (int k = 2;; ++k) {
    // kn/(3k-1) <= s < (k-1)n/(3k-4)
    if (k * n <= (3 * k - 1) * s && (3 * k - 4) * s < (k - 1) * n)
      return {RangeKind::KRange, k};
  }
}

Rational g_value(long long n, long long s) {
  RangeIndex r = range_index(n, s);
  switch (r.kind) {
    case RangeKind::BelowThird:
      return Rational(n * s, 2);
    case RangeKind::KRange:
      return Rational(g_k_value(r.k, n, s));
    case RangeKind::AtOrAboveHalf:
      return Rational(mantel_bound(n));
  }
  throw std::logic_error("unreachable");
}

Rational f_conjectured(Rational alpha) {
  if (alpha <= Rational(0) || alpha > Rational(1))
    throw std::invalid_argument("alpha must lie in (0,1]");
  if (alpha <= Rational(1, 3)) return alpha;
  if (alpha >= Rational(1, 2)) return Rational(1, 2);
  for (int k = 2;; ++k) {
    if (Rational(k, 3 * k - 1) <= alpha && alpha < Rational(k - 1, 3 * k - 4)) {
      long long kk = k;
      Rational a2 = alpha * alpha;
      return Rational(kk * (kk - 1)) - Rational(2 * kk * (3 * kk - 4)) * alpha +
             Rational((3 * kk - 4) * (3 * kk - 1)) * a2;
    }
  }
}

long long trivial_bound(long long n, long long s) { return n * s / 2; }

Rational trivial_bound_rational(long long n, long long s) { return Rational(n * s, 2); }

long long mantel_bound(long long n) { return n * n / 4; }

std::pair<long long, long long> fact26_identity(int k, long long n, long long s) {
  if (k < 2) throw std::invalid_argument("fact26_identity requires k >= 2");
  long long lhs = 2 * g_k_value(k, n, s) - n * s;
  long long rhs = (k * n - (3 * k - 1) * s) * ((k - 1) * n - (3 * k - 4) * s);
  return {lhs, rhs};
}

FormulaPoint formula_point(long long n, long long s) {
  FormulaPoint p;
  p.n = n;
  p.s = s;
  p.range = range_index(n, s);
  p.g = g_value(n, s);
  p.g_floor = p.g.floor();
  p.trivial = trivial_bound(n, s);
  p.mantel = mantel_bound(n);
  return p;
}

}  // namespace trifree
