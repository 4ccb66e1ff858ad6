#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace ammann {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// phi = (1+sqrt(5))/2, as a double. Exact values live in GoldenNumber.
inline constexpr double kPhi = 1.6180339887498948482;
inline constexpr double kLogPhi = 0.48121182505960344750;

namespace detail {

/// Extended Fibonacci: F(0)=0, F(1)=1, F(n)=F(n-1)+F(n-2), and
/// F(-n) = (-1)^(n+1) F(n) so that phi^n = F(n) phi + F(n-1) holds
/// for every integer n.
inline BigInt fib_ext(long n) {
  long m = n >= 0 ? n : -n;
  BigInt prev = 0, cur = 1; // F(0), F(1)
  if (m == 0) return 0;
  for (long i = 1; i < m; ++i) {
    BigInt next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  if (n < 0 && m % 2 == 0) return -cur;
  return cur;
}

/// Exact sign of u + v*phi for integers u, v.
/// 2(u + v*phi) = (2u+v) + v*sqrt(5); compare (2u+v)^2 against 5v^2
/// when the two parts disagree in sign.
inline int sign_z_phi(const BigInt& u, const BigInt& v) {
  const BigInt t = 2 * u + v;
  const int st = t.sign();
  const int sv = v.sign();
  if (st == 0) return sv;
  if (sv == 0) return st;
  if (st == sv) return st;
  const BigInt d = t * t - 5 * v * v; // nonzero: sqrt(5) is irrational
  return st > 0 ? d.sign() : -d.sign();
}

} // namespace detail

/// Element of Z[sqrt(phi)]: the real number p + q*phi + (r + s*phi)*sqrt(phi).
///
/// The basis (1, phi, sqrt(phi), phi*sqrt(phi)) is linearly independent over
/// the rationals, so the representation is unique and equality is
/// coefficient-wise. The ring is closed under + and * via the reductions
/// phi^2 = phi + 1 and sqrt(phi)^2 = phi, and contains every half-integer
/// power phi^(k/2) as a unit, so no division is ever needed.
struct GoldenNumber {
  BigInt p, q, r, s;

  GoldenNumber() = default;
  GoldenNumber(BigInt p_, BigInt q_, BigInt r_, BigInt s_)
      : p(std::move(p_)), q(std::move(q_)), r(std::move(r_)), s(std::move(s_)) {}

  static GoldenNumber zero() { return {0, 0, 0, 0}; }
  static GoldenNumber one() { return {1, 0, 0, 0}; }
  static GoldenNumber phi() { return {0, 1, 0, 0}; }
  static GoldenNumber sqrt_phi() { return {0, 0, 1, 0}; }

  bool is_zero() const { return p == 0 && q == 0 && r == 0 && s == 0; }

  friend bool operator==(const GoldenNumber& a, const GoldenNumber& b) {
    return a.p == b.p && a.q == b.q && a.r == b.r && a.s == b.s;
  }
  friend bool operator!=(const GoldenNumber& a, const GoldenNumber& b) { return !(a == b); }

  friend GoldenNumber operator+(const GoldenNumber& a, const GoldenNumber& b) {
    return {a.p + b.p, a.q + b.q, a.r + b.r, a.s + b.s};
  }
  friend GoldenNumber operator-(const GoldenNumber& a, const GoldenNumber& b) {
    return {a.p - b.p, a.q - b.q, a.r - b.r, a.s - b.s};
  }
  friend GoldenNumber operator-(const GoldenNumber& a) { return {-a.p, -a.q, -a.r, -a.s}; }

  /// Write x = A + B*sqrt(phi) with A, B in Z[phi]; then
  /// x*y = (Ax*Ay + Bx*By*phi) + (Ax*By + Ay*Bx)*sqrt(phi).
  friend GoldenNumber operator*(const GoldenNumber& a, const GoldenNumber& b) {
    // Z[phi] products: (u1+v1 phi)(u2+v2 phi) = (u1u2+v1v2) + (u1v2+u2v1+v1v2) phi
    const BigInt aa_u = a.p * b.p + a.q * b.q;
    const BigInt aa_v = a.p * b.q + a.q * b.p + a.q * b.q;
    const BigInt bb_u = a.r * b.r + a.s * b.s;
    const BigInt bb_v = a.r * b.s + a.s * b.r + a.s * b.s;
    // (u + v phi) * phi = v + (u + v) phi
    const BigInt ab_u = a.p * b.r + a.q * b.s;
    const BigInt ab_v = a.p * b.s + a.q * b.r + a.q * b.s;
    const BigInt ba_u = b.p * a.r + b.q * a.s;
    const BigInt ba_v = b.p * a.s + b.q * a.r + b.q * a.s;
    return {aa_u + bb_v, aa_v + bb_u + bb_v, ab_u + ba_u, ab_v + ba_v};
  }

  GoldenNumber& operator+=(const GoldenNumber& o) { return *this = *this + o; }
  GoldenNumber& operator-=(const GoldenNumber& o) { return *this = *this - o; }
  GoldenNumber& operator*=(const GoldenNumber& o) { return *this = *this * o; }
};

/// Exact sign of the real value, by nested squaring in Z[phi]. Never
/// consults floating point, so comparisons stay valid for arbitrarily
/// large coefficients.
inline int sign(const GoldenNumber& x) {
  const int sa = detail::sign_z_phi(x.p, x.q); // A = p + q phi
  const int sb = detail::sign_z_phi(x.r, x.s); // B = r + s phi
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Signs disagree: compare A^2 with B^2*phi inside Z[phi].
  // A^2 = (p^2+q^2) + (2pq+q^2) phi;  B^2*phi = (2rs+s^2) + (r^2+2rs+2s^2) phi.
  const BigInt du = x.p * x.p + x.q * x.q - 2 * x.r * x.s - x.s * x.s;
  const BigInt dv = 2 * x.p * x.q + x.q * x.q - x.r * x.r - 2 * x.r * x.s - 2 * x.s * x.s;
  const int sd = detail::sign_z_phi(du, dv); // nonzero: phi is not a square in Q(phi)
  return sa > 0 ? sd : -sd;
}

inline int compare(const GoldenNumber& a, const GoldenNumber& b) { return sign(a - b); }

inline bool operator<(const GoldenNumber& a, const GoldenNumber& b) { return compare(a, b) < 0; }
inline bool operator>(const GoldenNumber& a, const GoldenNumber& b) { return compare(a, b) > 0; }
inline bool operator<=(const GoldenNumber& a, const GoldenNumber& b) { return compare(a, b) <= 0; }
inline bool operator>=(const GoldenNumber& a, const GoldenNumber& b) { return compare(a, b) >= 0; }

/// Exact phi^(k/2) for any integer k (the n-substitution inflation factor
/// phi^(n/2) and the deflation factor phi^(-1/2) are the k=n and k=-1 cases).
/// Negative powers use phi^-1 = phi - 1, which keeps everything in the ring.
inline GoldenNumber half_power_of_phi(long k) {
  const long rem = ((k % 2) + 2) % 2;
  const long m = (k - rem) / 2; // k = 2m + rem, floor division
  BigInt fm1 = detail::fib_ext(m - 1);
  BigInt fm = detail::fib_ext(m);
  // phi^m = F(m) phi + F(m-1); multiply by sqrt(phi) when k is odd
  if (rem == 1) return {0, 0, std::move(fm1), std::move(fm)};
  return {std::move(fm1), std::move(fm), 0, 0};
}

/// Double-precision value of x. Evaluated through a 50-digit float
/// intermediate, so the relative error is far below 2^-50 whenever the
/// result is representable; overflow of the final value is a range error.
inline double to_double(const GoldenNumber& x) {
  using Float50 = boost::multiprecision::cpp_bin_float_50;
  static const Float50 kSqrtPhi50 = sqrt((1 + sqrt(Float50(5))) / 2);
  static const Float50 kPhi50 = kSqrtPhi50 * kSqrtPhi50;
  const Float50 value =
      Float50(x.p) + Float50(x.q) * kPhi50 + (Float50(x.r) + Float50(x.s) * kPhi50) * kSqrtPhi50;
  const double out = value.convert_to<double>();
  if (!std::isfinite(out)) throw std::range_error("GoldenNumber exceeds double range");
  return out;
}

/// Coefficient tuple "(p, q, r, s)"; used in verifier reports.
inline std::string to_string(const GoldenNumber& x) {
  std::ostringstream os;
  os << "(" << x.p << ", " << x.q << ", " << x.r << ", " << x.s << ")";
  return os.str();
}

} // namespace ammann
