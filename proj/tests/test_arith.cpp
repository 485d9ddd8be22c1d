#include <doctest.h>

#include <random>

#include "wlink/arith.hpp"

using wlink::Integer;
using wlink::Rational;

TEST_CASE("gcd basics") {
  CHECK(wlink::gcd(15, 5) == 5);
  CHECK(wlink::gcd(7, 1) == 1);
  CHECK(wlink::gcd(0, 6) == 6);
  CHECK(wlink::gcd(6, 0) == 6);
  CHECK(wlink::gcd(0, 0) == 0);
  CHECK(wlink::gcd(-15, 5) == 5);
  CHECK(wlink::gcd(-12, -18) == 6);
}

TEST_CASE("lcm basics") {
  CHECK(wlink::lcm(5, 3) == 15);
  CHECK(wlink::lcm(1, 7) == 7);
  CHECK(wlink::lcm(7, 1) == 7);
  CHECK(wlink::lcm(6, 4) == 12);
  CHECK_THROWS_AS(wlink::lcm(0, 4), std::domain_error);
  CHECK_THROWS_AS(wlink::lcm(4, -2), std::domain_error);
}

TEST_CASE("lcm(6,4) against exhaustive search") {
  // Smallest m with 6 | m and 4 | m, found by counting.
  long long m = 1;
  while (m % 6 != 0 || m % 4 != 0) ++m;
  CHECK(wlink::lcm(6, 4) == m);
}

TEST_CASE("reduce_fraction") {
  Rational r = wlink::reduce_fraction(15, 7);
  CHECK(numerator(r) == 15);
  CHECK(denominator(r) == 7);

  r = wlink::reduce_fraction(15, 5);
  CHECK(numerator(r) == 3);
  CHECK(denominator(r) == 1);

  r = wlink::reduce_fraction(-4, -6);
  CHECK(numerator(r) == 2);
  CHECK(denominator(r) == 3);

  r = wlink::reduce_fraction(4, -6);
  CHECK(numerator(r) == -2);
  CHECK(denominator(r) == 3);

  r = wlink::reduce_fraction(0, -9);
  CHECK(numerator(r) == 0);
  CHECK(denominator(r) == 1);

  CHECK_THROWS_AS(wlink::reduce_fraction(3, 0), std::domain_error);
}

TEST_CASE("gcd * lcm == a * b for random positive pairs") {
  std::mt19937 rng(20259);
  std::uniform_int_distribution<long long> dist(1, 1000000);
  for (int trial = 0; trial < 2000; ++trial) {
    const Integer a = dist(rng);
    const Integer b = dist(rng);
    CHECK(wlink::gcd(a, b) * wlink::lcm(a, b) == a * b);
  }
}

TEST_CASE("reduce_fraction is idempotent") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<long long> dist(-500, 500);
  for (int trial = 0; trial < 2000; ++trial) {
    const Integer p = dist(rng);
    Integer q = dist(rng);
    if (q == 0) q = 1;
    const Rational once = wlink::reduce_fraction(p, q);
    const Rational twice =
        wlink::reduce_fraction(numerator(once), denominator(once));
    CHECK(once == twice);
    CHECK(denominator(once) > 0);
    CHECK(wlink::gcd(numerator(once), denominator(once)) == 1);
  }
}

TEST_CASE("integrality checks") {
  CHECK(wlink::is_integer(wlink::reduce_fraction(84, 1)));
  CHECK(!wlink::is_integer(wlink::reduce_fraction(224, 5)));
  CHECK(wlink::to_integer(wlink::reduce_fraction(84, 1)) == 84);
  CHECK_THROWS_AS(wlink::to_integer(wlink::reduce_fraction(224, 5)),
                  wlink::NonIntegralError);
  try {
    wlink::to_integer(wlink::reduce_fraction(224, 5));
  } catch (const wlink::NonIntegralError& e) {
    CHECK(e.value == wlink::reduce_fraction(224, 5));
  }
}

TEST_CASE("rational formatting") {
  CHECK(wlink::to_string(wlink::reduce_fraction(224, 5)) == "224/5");
  CHECK(wlink::to_string(wlink::reduce_fraction(84, 1)) == "84");
  CHECK(wlink::to_string(wlink::reduce_fraction(-4, 6)) == "-2/3");
}

TEST_CASE("no overflow at scan magnitudes") {
  // Products of the size the scan mode produces must stay exact.
  Integer big = 1;
  for (int i = 0; i < 40; ++i) big *= 1000003;
  CHECK(big % 1000003 == 0);
  CHECK(big > 0);
  CHECK(wlink::gcd(big, big * 7) == big);
}
