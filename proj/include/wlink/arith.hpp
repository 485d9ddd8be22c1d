#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace wlink {

// Exact arithmetic substrate. Every quantity in the library is an exact
// integer or rational; nothing is ever rounded.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when a quantity that must be an integer turns out fractional.
// Carries the exact offending value.
struct NonIntegralError : std::domain_error {
  Rational value;
  NonIntegralError(const std::string& what, Rational v);
};

// Greatest common divisor, non-negative, with gcd(0,0) = 0.
Integer gcd(const Integer& a, const Integer& b);

// Least common multiple of two positive integers. Satisfies
// gcd(a,b) * lcm(a,b) = a * b. Throws std::domain_error on a <= 0 or b <= 0.
Integer lcm(const Integer& a, const Integer& b);

// Lowest-terms fraction p/q with positive denominator.
// Throws std::domain_error when q = 0.
Rational reduce_fraction(const Integer& p, const Integer& q);

bool is_integer(const Rational& q);

// Exact integer value of q; throws NonIntegralError otherwise.
Integer to_integer(const Rational& q);

// "p" when integral, "p/q" otherwise.
std::string to_string(const Rational& q);

}  // namespace wlink
