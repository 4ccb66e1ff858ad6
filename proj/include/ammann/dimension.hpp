#pragma once

#include "ammann/errors.hpp"
#include "ammann/golden.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ammann {

/// Fibonacci number F_n, F_0 = 0, F_1 = F_2 = 1. Exact for any n the
/// machine can hold.
inline BigInt fib(long n) {
  if (n < 0) throw InvalidRangeError("fib: n must be >= 0");
  BigInt prev = 0, cur = 1;
  if (n == 0) return 0;
  for (long i = 1; i < n; ++i) {
    BigInt next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// p(x) = x^n - c_lin*x - c_const with c_lin = F_n - b, c_const = F_{n-1} - a.
/// The unique positive root x gives the similarity dimension 2*log_phi(x).
struct DimensionPoly {
  int n = 0;
  BigInt c_lin, c_const;

  friend bool operator==(const DimensionPoly&, const DimensionPoly&) = default;
};

/// Validates (n,a,b) and builds the dimension polynomial.
/// Requires n >= 1, 0 <= a <= F_{n-1}, 0 <= b <= F_n, and not both maxima
/// (removing every tile leaves nothing to have a dimension).
inline DimensionPoly build_poly(int n, const BigInt& a, const BigInt& b) {
  if (n < 1) throw InvalidRangeError("build_poly: n must be >= 1");
  const BigInt fn1 = fib(n - 1);
  const BigInt fn = fib(n);
  if (a < 0 || a > fn1)
    throw InvalidRangeError("build_poly: a must be in [0, F_{n-1} = " + fn1.str() + "]");
  if (b < 0 || b > fn)
    throw InvalidRangeError("build_poly: b must be in [0, F_n = " + fn.str() + "]");
  if (a == fn1 && b == fn)
    throw EmptyFractalError("build_poly: all tiles removed (a = F_{n-1} and b = F_n)");
  return {n, fn - b, fn1 - a};
}

/// Exact dyadic interval [lo, hi] = [num/2^j, (num+width)/2^j] around the
/// positive root, with p(lo) <= 0 <= p(hi). Width 0 means the root was hit
/// exactly.
struct RootInterval {
  BigRational lo, hi;

  bool exact() const { return lo == hi; }
};

namespace detail {

/// Sign of p(m / 2^j) using integer arithmetic only. Clearing the
/// denominator 2^(jn) leaves m^n - c_lin*m*2^(j(n-1)) - c_const*2^(jn);
/// the power-of-two factors are shifts.
inline int dyadic_sign(const DimensionPoly& p, const BigInt& m, unsigned j) {
  using boost::multiprecision::pow;
  const std::size_t nj = static_cast<std::size_t>(p.n) * j;
  const BigInt value = pow(m, static_cast<unsigned>(p.n)) - ((p.c_lin * m) << (nj - j)) -
                       (p.c_const << nj);
  return value.sign();
}

} // namespace detail

/// Bisection for the unique positive root of a dimension polynomial, with
/// exact big-integer sign decisions at every step (no floating point).
///
/// The bracket [1, 2] is always valid: p(1) = 1 - c_lin - c_const <= 0
/// because at least one tile survives, and p(2) >= 0 because
/// 2^n >= 2 F_n + F_{n-1} = F_{n+2} for n >= 1. The root never exceeds phi
/// (p(phi) = b*phi + a >= 0), so the dimension never exceeds 2.
///
/// Returns an interval of width exactly 2^-iters, or a zero-width interval
/// when the root is rational (root 1, the single-survivor case).
///
/// Degenerate case: (n,a,b) = (1,0,0) makes p identically zero (Gen 1 of a
/// small tile is one big tile, so the self-similarity relation is vacuous).
/// The full tiling's root is phi by the identity phi^n = F_n phi + F_{n-1},
/// so this case bisects x^2 - x - 1 instead.
inline RootInterval solve_root(const DimensionPoly& poly, int iters = 80) {
  if (iters < 0) throw InvalidRangeError("solve_root: iters must be >= 0");
  DimensionPoly p = poly;
  if (p.n == 1 && p.c_lin == 1 && p.c_const == 0) p = DimensionPoly{2, 1, 1};

  // p(1) = 1 - c_lin - c_const; root exactly 1 iff the coefficients sum to 1.
  if (p.c_lin + p.c_const == 1) return {BigRational(1), BigRational(1)};

  BigInt num = 1; // interval [num/2^j, (num+1)/2^j], starts at [1, 2]
  unsigned j = 0;
  for (int it = 0; it < iters; ++it) {
    const BigInt mid = 2 * num + 1;
    const int s = detail::dyadic_sign(p, mid, j + 1);
    if (s == 0) {
      const BigInt den = BigInt(1) << (j + 1);
      const BigRational exact(mid, den);
      return {exact, exact};
    }
    if (s < 0)
      num = mid;
    else
      num *= 2;
    ++j;
  }
  const BigInt den = BigInt(1) << j;
  const BigInt num_hi = num + 1;
  return {BigRational(num, den), BigRational(num_hi, den)};
}

/// Everything known about one (n,a,b) dimension computation.
struct DimensionResult {
  int n = 0;
  BigInt a, b;
  DimensionPoly poly;
  RootInterval root_interval;
  double root = 0.0;      // interval midpoint
  double dimension = 0.0; // 2 * log_phi(root), clamped to [0, 2]
  double uncertainty = 0.0;
};

/// Similarity dimension d(n,a,b) = 2*log_phi(x) with x the unique positive
/// root of the dimension polynomial. The uncertainty is the root interval
/// width propagated through the logarithm; root exactly 1 is returned as an
/// exact d = 0.
inline DimensionResult similarity_dimension(int n, const BigInt& a, const BigInt& b,
                                            int iters = 80) {
  DimensionResult res;
  res.n = n;
  res.a = a;
  res.b = b;
  res.poly = build_poly(n, a, b);
  res.root_interval = solve_root(res.poly, iters);
  const BigRational mid = (res.root_interval.lo + res.root_interval.hi) / 2;
  res.root = mid.convert_to<double>();
  if (res.root_interval.exact() && res.root_interval.lo == 1) {
    res.dimension = 0.0;
    res.uncertainty = 0.0;
    return res;
  }
  res.dimension = 2.0 * std::log(res.root) / kLogPhi;
  const double lo = res.root_interval.lo.convert_to<double>();
  const double hi = res.root_interval.hi.convert_to<double>();
  res.uncertainty = 2.0 * (std::log(hi) - std::log(lo)) / kLogPhi;
  if (res.dimension < 0.0) res.dimension = 0.0;
  if (res.dimension > 2.0) res.dimension = 2.0;
  return res;
}

/// One Moran-equation term: `count` copies scaled by `ratio`.
struct MoranTerm {
  double count = 0.0;
  double ratio = 0.0;
};

/// Solves sum_i count_i * ratio_i^d = 1 for d by bisection on [0, 64].
/// Used to cross-validate the polynomial route: the (n,a,b) fractal has
/// (F_{n-1}-a) copies at phi^(-n/2) and (F_n-b) copies at phi^(-(n-1)/2).
inline double moran_dimension(const std::vector<MoranTerm>& terms) {
  if (terms.empty()) throw InvalidRangeError("moran_dimension: no terms");
  for (const MoranTerm& t : terms) {
    if (!(t.count >= 1.0)) throw InvalidRangeError("moran_dimension: counts must be >= 1");
    if (!(t.ratio > 0.0 && t.ratio < 1.0))
      throw InvalidRangeError("moran_dimension: ratios must be in (0, 1)");
  }
  auto f = [&](double d) {
    double sum = -1.0;
    for (const MoranTerm& t : terms) sum += t.count * std::pow(t.ratio, d);
    return sum;
  };
  double lo = 0.0, hi = 64.0;
  const double flo = f(lo);
  if (flo == 0.0) return 0.0;
  if (flo < 0.0) return 0.0; // single copy: dimension 0
  if (f(hi) > 0.0) throw InvalidRangeError("moran_dimension: root above 64");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

} // namespace ammann
