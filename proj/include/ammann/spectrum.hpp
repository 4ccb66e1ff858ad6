#pragma once

#include "ammann/dimension.hpp"
#include "ammann/errors.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace ammann {

/// One point of a fixed-n dimension sweep: t = a + b tiles removed in the
/// canonical order (all Small tiles first, then Big ones).
struct SpectrumRow {
  int n = 0;
  BigInt a, b;
  BigInt removed, total;
  double fraction = 0.0;
  double root = 0.0;
  double dimension = 0.0;
};

/// Removal split for the t-th sweep row: Small tiles go first.
inline std::pair<BigInt, BigInt> row_params(int n, const BigInt& t) {
  const BigInt fn1 = fib(n - 1);
  if (t <= fn1) return {t, BigInt(0)};
  return {fn1, t - fn1};
}

/// All rows t = 0 .. F_{n+1}-1 (the all-removed t = F_{n+1} has no
/// dimension and is excluded). Dimensions decrease strictly from 2 at t = 0
/// to 0 at the single-survivor last row.
inline std::vector<SpectrumRow> sweep(int n, int iters = 80) {
  if (n < 2) throw InvalidRangeError("sweep: n must be >= 2");
  if (n > 30) throw ResourceLimitError("sweep: n > 30 (" + fib(n + 1).str() + " rows)");
  const BigInt total = fib(n + 1);
  std::vector<SpectrumRow> rows;
  rows.reserve(static_cast<std::size_t>(total));
  for (BigInt t = 0; t < total; ++t) {
    const auto [a, b] = row_params(n, t);
    const DimensionResult res = similarity_dimension(n, a, b, iters);
    SpectrumRow row;
    row.n = n;
    row.a = a;
    row.b = b;
    row.removed = t;
    row.total = total;
    row.fraction = BigRational(t, total).convert_to<double>();
    row.root = res.root;
    row.dimension = res.dimension;
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Largest dimension drop between consecutive sweep rows whose dimensions
/// both lie in [lo, hi]. Shrinking gaps as n grows is the computable
/// evidence for density of the dimension spectrum.
inline double max_band_gap(const std::vector<SpectrumRow>& rows, double lo, double hi) {
  double gap = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double d_prev = rows[i - 1].dimension;
    const double d_cur = rows[i].dimension;
    if (d_prev >= lo && d_prev <= hi && d_cur >= lo && d_cur <= hi)
      gap = std::max(gap, d_prev - d_cur);
  }
  return gap;
}

struct ApproxResult {
  double target = 0.0;
  double eps = 0.0;
  int n = 0;
  BigInt a, b;
  double root = 0.0;
  double dimension = 0.0;
  bool reached = false;
};

/// Searches for (n,a,b) with |d - target| <= eps, walking n upward and
/// binary-searching each n's sweep (dimension is strictly decreasing in t).
/// Returns at the first n that reaches eps; otherwise the best row found
/// anywhere, flagged not reached.
inline ApproxResult approx_dimension(double target, double eps, int n_max = 60,
                                     int iters = 80) {
  if (!(target >= 0.0 && target <= 2.0))
    throw InvalidRangeError("approx_dimension: target must be in [0, 2]");
  if (!(eps > 0.0)) throw InvalidRangeError("approx_dimension: eps must be > 0");
  if (n_max < 2) throw InvalidRangeError("approx_dimension: n_max must be >= 2");
  if (n_max > 80) throw ResourceLimitError("approx_dimension: n_max > 80");

  ApproxResult best;
  best.target = target;
  best.eps = eps;

  for (int n = 2; n <= n_max; ++n) {
    const BigInt t_last = fib(n + 1) - 1;
    const auto dim_at = [&](const BigInt& t) {
      const auto [a, b] = row_params(n, t);
      return similarity_dimension(n, a, b, iters);
    };

    // Smallest t with d(t) <= target; d(t_last) = 0 <= target guarantees one.
    BigInt lo = 0, hi = t_last;
    if (dim_at(lo).dimension > target) {
      while (lo < hi) {
        const BigInt mid = (lo + hi) / 2;
        if (dim_at(mid).dimension <= target)
          hi = mid;
        else
          lo = mid + 1;
      }
    }

    bool improved = false;
    const BigInt candidates[2] = {lo, lo - 1};
    for (const BigInt& t : candidates) {
      if (t < 0) continue;
      const DimensionResult res = dim_at(t);
      const double err = std::abs(res.dimension - target);
      if (!best.n || err < std::abs(best.dimension - target)) {
        const auto [a, b] = row_params(n, t);
        best.n = n;
        best.a = a;
        best.b = b;
        best.root = res.root;
        best.dimension = res.dimension;
        improved = improved || err <= eps;
      }
    }
    if (improved || std::abs(best.dimension - target) <= eps) {
      best.reached = true;
      return best;
    }
  }
  return best;
}

struct LiftParams {
  int n = 0;
  BigInt a, b;
};

/// (a,b) -> (F_{k-1} a + F_k b, F_k a + F_{k+1} b), the k-th power of
/// [[0,1],[1,1]]. Maps valid (n,a,b) removal counts to valid (n+k,a',b')
/// ones.
inline LiftParams lift(int n, const BigInt& a, const BigInt& b, int k) {
  if (k < 0) throw InvalidRangeError("lift: k must be >= 0");
  if (k == 0) return {n, a, b};
  return {n + k, fib(k - 1) * a + fib(k) * b, fib(k) * a + fib(k + 1) * b};
}

struct LiftResult {
  int n = 0;
  BigInt a, b;
  double d = 0.0;
  int k = 0;
  int n_lifted = 0;
  BigInt a_lifted, b_lifted;
  double d_lifted = 0.0;
  double drift = 0.0;
};

/// Measures |d(n+k,a',b') - d(n,a,b)| for k = 0..k_max. The lifted
/// parameters carry the same removal counts through k extra substitution
/// steps, but the dimensions genuinely differ unless a = b = 0 (the lifted
/// polynomial evaluated at the source root leaves a residual
/// (F_n - b)(x^2 - x - 1), which vanishes only at x = phi). This function
/// reports the drift; nothing asserts it is zero.
inline std::vector<LiftResult> lift_drift_report(int n, const BigInt& a, const BigInt& b,
                                                 int k_max, int iters = 80) {
  if (k_max < 0) throw InvalidRangeError("lift_drift_report: k_max must be >= 0");
  const DimensionResult source = similarity_dimension(n, a, b, iters);
  std::vector<LiftResult> out;
  out.reserve(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) {
    const LiftParams lifted = lift(n, a, b, k);
    const DimensionResult res =
        similarity_dimension(lifted.n, lifted.a, lifted.b, iters);
    LiftResult row;
    row.n = n;
    row.a = a;
    row.b = b;
    row.d = source.dimension;
    row.k = k;
    row.n_lifted = lifted.n;
    row.a_lifted = lifted.a;
    row.b_lifted = lifted.b;
    row.d_lifted = res.dimension;
    row.drift = std::abs(res.dimension - source.dimension);
    out.push_back(std::move(row));
  }
  return out;
}

} // namespace ammann
