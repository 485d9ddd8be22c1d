#include "wlink/arith.hpp"

#include <utility>

namespace wlink {

NonIntegralError::NonIntegralError(const std::string& what, Rational v)
    : std::domain_error(what), value(std::move(v)) {}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a <= 0 || b <= 0) {
    throw std::domain_error("lcm requires positive arguments");
  }
  return (a / boost::multiprecision::gcd(a, b)) * b;
}

Rational reduce_fraction(const Integer& p, const Integer& q) {
  if (q == 0) {
    throw std::domain_error("reduce_fraction: zero denominator");
  }
  // Division of two rationals canonicalizes: lowest terms, denominator > 0.
  return Rational(p) / Rational(q);
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

Integer to_integer(const Rational& q) {
  if (!is_integer(q)) {
    throw NonIntegralError("not an integer: " + to_string(q), q);
  }
  return numerator(q);
}

std::string to_string(const Rational& q) { return q.str(); }

}  // namespace wlink
