#include "ammann/dimension.hpp"

#include "ammann/substitution.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

using namespace ammann;

namespace {

// Evaluate p(x) = x^n - c_lin x - c_const at an exact rational point.
BigRational eval_poly(const DimensionPoly& p, const BigRational& x) {
  BigRational acc = 1;
  for (int i = 0; i < p.n; ++i) acc *= x;
  return acc - BigRational(p.c_lin) * x - BigRational(p.c_const);
}

} // namespace

TEST_CASE("Fibonacci sequence", "[dimension]") {
  CHECK(fib(0) == 0);
  CHECK(fib(1) == 1);
  CHECK(fib(5) == 5);
  CHECK(fib(4) == 3);
  CHECK(fib(10) == 55);
  CHECK(fib(100) == BigInt("354224848179261915075"));
  CHECK_THROWS_AS(fib(-1), InvalidRangeError);
}

TEST_CASE("polynomial construction", "[dimension]") {
  const DimensionPoly p = build_poly(5, 0, 1);
  CHECK(p.n == 5);
  CHECK(p.c_lin == 4);  // F_5 - b = 5 - 1
  CHECK(p.c_const == 3); // F_4 - a = 3 - 0

  const DimensionPoly full = build_poly(7, 0, 0);
  CHECK(full.c_lin == fib(7));
  CHECK(full.c_const == fib(6));

  const DimensionPoly thin = build_poly(2, 1, 0);
  CHECK(thin.n == 2);
  CHECK(thin.c_lin == 1);
  CHECK(thin.c_const == 0);
}

TEST_CASE("polynomial construction guards", "[dimension]") {
  CHECK_THROWS_AS(build_poly(0, 0, 0), InvalidRangeError);
  CHECK_THROWS_AS(build_poly(5, 4, 0), InvalidRangeError);  // a > F_4 = 3
  CHECK_THROWS_AS(build_poly(5, 0, 6), InvalidRangeError);  // b > F_5 = 5
  CHECK_THROWS_AS(build_poly(5, -1, 0), InvalidRangeError);
  CHECK_THROWS_AS(build_poly(5, 3, 5), EmptyFractalError);  // nothing left
  CHECK_THROWS_AS(build_poly(1, 0, 1), EmptyFractalError);
}

TEST_CASE("root bracketing is exact", "[dimension]") {
  const DimensionPoly p = build_poly(5, 0, 1);
  const RootInterval iv = solve_root(p);

  // Interval endpoints are dyadic rationals with exact width 2^-80.
  const BigInt one = 1;
  const BigRational width = BigRational(one, one << 80);
  REQUIRE(iv.hi - iv.lo == width);
  REQUIRE_FALSE(iv.exact());

  // Sign change across the interval, verified in exact rational arithmetic.
  REQUIRE(eval_poly(p, iv.lo) <= 0);
  REQUIRE(eval_poly(p, iv.hi) >= 0);

  // Frozen enclosure: root = 1.560040682404455...
  CHECK(iv.lo > BigRational(15595, 10000));
  CHECK(iv.hi < BigRational(15605, 10000));
}

TEST_CASE("full tiling root is the golden ratio", "[dimension]") {
  for (int n = 1; n <= 20; ++n) {
    const RootInterval iv = solve_root(build_poly(n, 0, 0));
    // phi in [lo, hi]: check sign of lo - phi and hi - phi exactly in Z[phi].
    // For a rational p/q, p/q <= phi iff sign(p - q*phi) <= 0.
    const BigInt lo_num = numerator(iv.lo);
    const BigInt neg_lo_den = -denominator(iv.lo);
    const BigInt hi_num = numerator(iv.hi);
    const BigInt neg_hi_den = -denominator(iv.hi);
    REQUIRE(detail::sign_z_phi(lo_num, neg_lo_den) <= 0);
    REQUIRE(detail::sign_z_phi(hi_num, neg_hi_den) >= 0);

    const DimensionResult r = similarity_dimension(n, 0, 0);
    REQUIRE(std::abs(r.dimension - 2.0) <= 1e-10);
  }
}

TEST_CASE("degenerate and collapsed cases", "[dimension]") {
  SECTION("n = 1 full tiling reduces to the golden equation") {
    const DimensionResult r = similarity_dimension(1, 0, 0);
    CHECK(std::abs(r.dimension - 2.0) <= 1e-10);
  }
  SECTION("root collapses to one when coefficients sum to one") {
    const DimensionPoly p = build_poly(2, 1, 0); // x^2 - x: positive root 1
    const RootInterval iv = solve_root(p);
    REQUIRE(iv.exact());
    CHECK(iv.lo == 1);
    const DimensionResult r = similarity_dimension(2, 1, 0);
    CHECK(r.dimension == 0.0);
    CHECK(r.uncertainty == 0.0);
  }
  SECTION("keeping a single tile always gives dimension zero") {
    const DimensionResult r = similarity_dimension(10, 34, 54);
    CHECK(r.dimension == 0.0);
    CHECK(r.root == 1.0);
  }
}

TEST_CASE("reference dimension value", "[dimension]") {
  const DimensionResult r = similarity_dimension(5, 0, 1);
  CHECK(std::abs(r.root - 1.560040682404455) <= 1e-12);
  CHECK(std::abs(r.dimension - 1.848299963662448) <= 1e-12);
  CHECK(std::abs(r.dimension - 1.848) <= 1e-3);
  CHECK(r.uncertainty <= 1e-20);
}

TEST_CASE("bisection agrees with a floating-point oracle", "[dimension]") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.next() % 19); // n in [2, 20]
    const long long a_max = oracles::fib_ll(n - 1);
    const long long b_max = oracles::fib_ll(n);
    long long a = static_cast<long long>(rng.next() % (a_max + 1));
    long long b = static_cast<long long>(rng.next() % (b_max + 1));
    if (a == a_max && b == b_max) b -= 1; // avoid the empty fractal
    const DimensionResult r = similarity_dimension(n, a, b);
    const double expected = oracles::dimension_oracle(n, a, b);
    REQUIRE(std::abs(r.dimension - expected) <= 1e-9);
  }
}

TEST_CASE("iteration budget controls the interval width", "[dimension]") {
  const DimensionPoly p = build_poly(5, 0, 1);
  const RootInterval coarse = solve_root(p, 10);
  const BigInt one = 1;
  CHECK(coarse.hi - coarse.lo == BigRational(one, one << 10));
  const RootInterval zero = solve_root(p, 0);
  CHECK(zero.lo == 1);
  CHECK(zero.hi == 2);
  CHECK_THROWS_AS(solve_root(p, -1), InvalidRangeError);
}

TEST_CASE("dimension decreases as removals increase", "[dimension]") {
  for (int n : {3, 5, 8}) {
    const long long a_max = oracles::fib_ll(n - 1);
    const long long b_max = oracles::fib_ll(n);
    for (long long a = 0; a + 1 <= a_max; ++a) {
      REQUIRE(similarity_dimension(n, a + 1, 0).dimension <
              similarity_dimension(n, a, 0).dimension);
    }
    for (long long b = 0; b + 1 <= b_max - 1; ++b) {
      REQUIRE(similarity_dimension(n, 0, b + 1).dimension <
              similarity_dimension(n, 0, b).dimension);
    }
  }
}

TEST_CASE("Moran solver on known systems", "[dimension]") {
  SECTION("Sierpinski carpet") {
    const double d = moran_dimension({{8.0, 1.0 / 3.0}});
    CHECK(std::abs(d - std::log(8.0) / std::log(3.0)) <= 1e-12);
  }
  SECTION("single contraction has dimension zero") {
    CHECK(moran_dimension({{1.0, 0.5}}) == 0.0);
  }
  SECTION("input validation") {
    CHECK_THROWS_AS(moran_dimension({}), InvalidRangeError);
    CHECK_THROWS_AS(moran_dimension({{4.0, 1.0}}), InvalidRangeError);
    CHECK_THROWS_AS(moran_dimension({{4.0, 1.5}}), InvalidRangeError);
    CHECK_THROWS_AS(moran_dimension({{0.5, 0.5}}), InvalidRangeError);
  }
}

TEST_CASE("Moran solver agrees with the exact bisection", "[dimension]") {
  const double sqrt_phi = std::sqrt(kPhi);

  SECTION("reference parameters") {
    // (5,0,1): 3 Smalls contracting by phi^-2.5, 4 Bigs by phi^-2.
    const double d = moran_dimension({{3.0, std::pow(sqrt_phi, -5)},
                                      {4.0, std::pow(sqrt_phi, -4)}});
    CHECK(std::abs(d - similarity_dimension(5, 0, 1).dimension) <= 1e-9);
  }

  SECTION("random parameters") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 2 + static_cast<int>(rng.next() % 19);
      const long long a_max = oracles::fib_ll(n - 1);
      const long long b_max = oracles::fib_ll(n);
      long long a = static_cast<long long>(rng.next() % (a_max + 1));
      long long b = static_cast<long long>(rng.next() % (b_max + 1));
      if (a == a_max && b == b_max) b -= 1;
      const double smalls = static_cast<double>(a_max - a);
      const double bigs = static_cast<double>(b_max - b);
      std::vector<MoranTerm> terms;
      if (smalls > 0) terms.push_back({smalls, std::pow(sqrt_phi, -n)});
      if (bigs > 0) terms.push_back({bigs, std::pow(sqrt_phi, -(n - 1))});
      const double d = moran_dimension(terms);
      REQUIRE(std::abs(d - similarity_dimension(n, a, b).dimension) <= 1e-9);
    }
  }
}
