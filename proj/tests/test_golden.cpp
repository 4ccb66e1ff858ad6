#include "ammann/golden.hpp"
#include "ammann/substitution.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>

using ammann::BigInt;
using ammann::GoldenNumber;
using ammann::half_power_of_phi;
using ammann::sign;
using ammann::to_double;

namespace {

GoldenNumber random_golden(ammann::SplitMix64& rng, std::uint64_t span = 101) {
  const auto coeff = [&] {
    return BigInt(static_cast<long long>(rng.next() % span) -
                  static_cast<long long>(span / 2));
  };
  return {coeff(), coeff(), coeff(), coeff()};
}

} // namespace

TEST_CASE("golden ring basics", "[golden]") {
  const GoldenNumber phi = GoldenNumber::phi();
  const GoldenNumber rphi = GoldenNumber::sqrt_phi();
  const GoldenNumber one = GoldenNumber::one();

  CHECK(phi * phi == phi + one);                            // phi^2 = phi + 1
  CHECK(rphi * rphi == phi);                                // sqrt(phi)^2 = phi
  CHECK(GoldenNumber{0, 0, 0, 1} * GoldenNumber{0, 0, 0, 1} ==
        GoldenNumber{1, 2, 0, 0});                          // (phi sqrt(phi))^2 = phi^3
  CHECK(GoldenNumber{0, 0, -1, 1} * rphi == one);           // phi^(-1/2) * phi^(1/2)
  CHECK(GoldenNumber::zero().is_zero());
  CHECK_FALSE(one.is_zero());
  CHECK(ammann::to_string(GoldenNumber{1, -2, 3, 4}) == "(1, -2, 3, 4)");
}

TEST_CASE("ring axioms on random elements", "[golden]") {
  ammann::SplitMix64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const GoldenNumber x = random_golden(rng);
    const GoldenNumber y = random_golden(rng);
    const GoldenNumber z = random_golden(rng);
    REQUIRE(x * y == y * x);
    REQUIRE((x * y) * z == x * (y * z));
    REQUIRE(x * (y + z) == x * y + x * z);
    REQUIRE(x + y - y == x);
  }
}

TEST_CASE("multiplication matches high-precision evaluation", "[golden]") {
  ammann::SplitMix64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const GoldenNumber x = random_golden(rng);
    const GoldenNumber y = random_golden(rng);
    const oracles::Float256 lhs = oracles::value256(x * y);
    const oracles::Float256 rhs = oracles::value256(x) * oracles::value256(y);
    REQUIRE(abs(lhs - rhs) < oracles::Float256("1e-60"));
  }
}

TEST_CASE("exact sign matches high-precision evaluation", "[golden]") {
  ammann::SplitMix64 rng(99);
  for (int i = 0; i < 500; ++i) {
    const GoldenNumber x = random_golden(rng);
    REQUIRE(sign(x) == oracles::sign256(x));
  }
}

TEST_CASE("sign is exact on adversarial near-zero values", "[golden]") {
  // phi^m - (F_m phi + F_{m-1}) is exactly zero for every m.
  for (long m = -12; m <= 12; ++m) {
    const GoldenNumber pow_m = half_power_of_phi(2 * m);
    const GoldenNumber closed{ammann::detail::fib_ext(m - 1), ammann::detail::fib_ext(m), 0, 0};
    const GoldenNumber diff = pow_m - closed;
    REQUIRE(diff.is_zero());
    REQUIRE(sign(diff) == 0);
    REQUIRE(sign(diff + GoldenNumber::one()) == 1);
    REQUIRE(sign(diff - GoldenNumber::one()) == -1);
  }
  // Fibonacci convergents straddle phi with alternating, tiny differences:
  // F_n phi - F_{n+1} = (-1)^(n+1) phi^(-n), positive exactly when n is odd.
  for (long n = 2; n <= 30; ++n) {
    const GoldenNumber x{-ammann::detail::fib_ext(n + 1), ammann::detail::fib_ext(n), 0, 0};
    REQUIRE(sign(x) == (n % 2 == 1 ? 1 : -1));
  }
  // Mixed rational/irrational parts with |value| < 1.
  for (long k = 1; k <= 20; ++k) {
    const GoldenNumber tiny = half_power_of_phi(-k);
    REQUIRE(sign(tiny) == 1);
    REQUIRE(sign(-tiny) == -1);
    REQUIRE(sign(GoldenNumber::one() - tiny) == 1);
  }
}

TEST_CASE("comparisons agree with numeric order", "[golden]") {
  ammann::SplitMix64 rng(321);
  for (int i = 0; i < 200; ++i) {
    const GoldenNumber x = random_golden(rng);
    const GoldenNumber y = random_golden(rng);
    const bool numeric_less = oracles::value256(x) < oracles::value256(y);
    REQUIRE((x < y) == numeric_less);
    REQUIRE((x >= y) == !numeric_less);
  }
  CHECK(GoldenNumber::one() < GoldenNumber::phi());
  CHECK(GoldenNumber::sqrt_phi() < GoldenNumber::phi());
  CHECK(GoldenNumber{0, 0, 0, 1} > GoldenNumber::phi()); // phi^(3/2) > phi
}

TEST_CASE("half powers of phi", "[golden]") {
  CHECK(half_power_of_phi(0) == GoldenNumber::one());
  CHECK(half_power_of_phi(1) == GoldenNumber::sqrt_phi());
  CHECK(half_power_of_phi(2) == GoldenNumber::phi());
  CHECK(half_power_of_phi(3) == GoldenNumber{0, 0, 0, 1});
  CHECK(half_power_of_phi(-2) == GoldenNumber{-1, 1, 0, 0}); // phi^-1 = phi - 1

  for (long k = -30; k <= 30; ++k) {
    REQUIRE(half_power_of_phi(k) * half_power_of_phi(-k) == GoldenNumber::one());
    REQUIRE(half_power_of_phi(k) * half_power_of_phi(1) == half_power_of_phi(k + 1));
    const oracles::Float256 expect = pow(oracles::sqrt_phi256(), static_cast<int>(k));
    const oracles::Float256 got = oracles::value256(half_power_of_phi(k));
    REQUIRE(abs(got - expect) < oracles::Float256("1e-55") * expect);
  }
}

TEST_CASE("extended Fibonacci numbers", "[golden]") {
  using ammann::detail::fib_ext;
  CHECK(fib_ext(0) == 0);
  CHECK(fib_ext(1) == 1);
  CHECK(fib_ext(10) == 55);
  CHECK(fib_ext(-1) == 1);
  CHECK(fib_ext(-2) == -1);
  CHECK(fib_ext(-4) == -3);
  CHECK(fib_ext(-5) == 5);
  for (long n = -20; n <= 20; ++n)
    REQUIRE(fib_ext(n) == fib_ext(n - 1) + fib_ext(n - 2));
}

TEST_CASE("conversion to double", "[golden]") {
  CHECK(to_double(GoldenNumber::zero()) == 0.0);
  CHECK(to_double(GoldenNumber::one()) == 1.0);
  CHECK(std::abs(to_double(GoldenNumber::phi()) - ammann::kPhi) < 1e-15);
  CHECK(std::abs(to_double(GoldenNumber::sqrt_phi()) - std::sqrt(ammann::kPhi)) < 1e-15);
  CHECK(std::abs(to_double(half_power_of_phi(-3)) - std::pow(ammann::kPhi, -1.5)) < 1e-15);
  CHECK_THROWS_AS(to_double(half_power_of_phi(3000)), std::range_error);
}
