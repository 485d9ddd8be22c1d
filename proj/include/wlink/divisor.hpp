#pragma once

#include <map>
#include <string>

#include "wlink/arith.hpp"
#include "wlink/wps.hpp"

namespace wlink {

// Formal rational combination of the elements Lambda_i = Div(t^i - 1) of the
// group ring of C*, where Div denotes the multiset of roots. The points of
// Lambda_a multiply pointwise as group elements, which collapses to
//
//     Lambda_a * Lambda_b = gcd(a,b) * Lambda_lcm(a,b),
//
// making Lambda_1 (the single point 1) the ring identity. Normal form keeps
// the terms sorted by index and stores no zero coefficients.
class CyclotomicDivisor {
 public:
  CyclotomicDivisor() = default;  // zero divisor

  // Normalizes by dropping zero coefficients; indices must be >= 1.
  explicit CyclotomicDivisor(std::map<Integer, Rational> terms);

  const std::map<Integer, Rational>& terms() const { return terms_; }
  Rational coefficient(const Integer& index) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_integral() const;

  friend bool operator==(const CyclotomicDivisor&, const CyclotomicDivisor&) = default;

 private:
  std::map<Integer, Rational> terms_;
};

// Multiplicity m_j of the primitive j-th roots of unity in the divisor,
// the unique refinement of the Lambda expansion into cyclotomic classes.
struct CyclotomicMultiplicities {
  std::map<Integer, Integer> mults;

  friend bool operator==(const CyclotomicMultiplicities&,
                         const CyclotomicMultiplicities&) = default;
};

struct LinkBetti {
  Integer b2;
};

// The single term {Lambda_i: 1}; i >= 1.
CyclotomicDivisor lambda(const Integer& i);

CyclotomicDivisor add(const CyclotomicDivisor& x, const CyclotomicDivisor& y);
CyclotomicDivisor mul(const CyclotomicDivisor& x, const CyclotomicDivisor& y);

inline CyclotomicDivisor operator+(const CyclotomicDivisor& x,
                                   const CyclotomicDivisor& y) {
  return add(x, y);
}
inline CyclotomicDivisor operator*(const CyclotomicDivisor& x,
                                   const CyclotomicDivisor& y) {
  return mul(x, y);
}

// Number of points counted with multiplicity: sum of coeff(Lambda_i) * i.
// Multiplicative, and equal to the Milnor number for Milnor-Orlik divisors.
Rational degree(const CyclotomicDivisor& x);

// Divisor of the Alexander polynomial of the link of a weighted homogeneous
// singularity: the product of ((1/v_i) Lambda_{u_i} - Lambda_1) over the four
// coordinates, where d/w_i = u_i/v_i in lowest terms. Factors with d = w_i
// vanish and annihilate the product.
CyclotomicDivisor milnor_orlik_divisor(const Weights& w, const Integer& d);

// Second Betti number of the link: the sum of all Lambda coefficients.
// Throws NonIntegralError on fractional coefficients and std::domain_error
// when the sum is negative (inconsistent input divisor).
LinkBetti betti2(const CyclotomicDivisor& x);

// m_j = sum of coeff(Lambda_i) over indices i divisible by j, for every j
// dividing a stored index; zero multiplicities are omitted. Requires
// integral coefficients. Negative m_j values are reported as-is; they mean
// the divisor is not the divisor of a polynomial.
CyclotomicMultiplicities cyclotomic_expand(const CyclotomicDivisor& x);

// Human-readable form, e.g. "9*L15 - L5 - L3 + L1"; "0" for the zero divisor.
std::string to_string(const CyclotomicDivisor& x);

}  // namespace wlink
