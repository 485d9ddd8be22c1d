#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "wlink/arith.hpp"

namespace wlink {

// Reduced weight vector (w0,w1,w2,w3) of the C* action on C^4, kept in the
// order it was given. Construction enforces w_i >= 1 and gcd(w) = 1.
class Weights {
 public:
  explicit Weights(const std::array<Integer, 4>& w);

  const std::array<Integer, 4>& values() const { return w_; }
  const Integer& operator[](std::size_t i) const { return w_[i]; }
  Integer total() const;    // w0 + w1 + w2 + w3
  Weights ascending() const;

  friend bool operator==(const Weights&, const Weights&) = default;

 private:
  std::array<Integer, 4> w_;
};

Weights make_weights(const std::array<Integer, 4>& values);

// Exponent vector (a0,a1,a2,a3) of the monomial z0^a0 z1^a1 z2^a2 z3^a3.
struct ExponentVector {
  std::array<Integer, 4> a;

  Integer weighted_degree(const Weights& w) const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
};

// Canonical basis order: descending lexicographic on (a0,a1,a2,a3), so
// z0^d comes first and the z0-free monomials last.
bool canonical_less(const ExponentVector& x, const ExponentVector& y);

// All monomials of one weighted degree, duplicate-free and canonically
// ordered; monomials.size() is dim S^degree(w).
struct MonomialBasis {
  Weights weights;
  Integer degree;
  std::vector<ExponentVector> monomials;
};

// Ambient well-formedness of P(w): every three of the four weights coprime.
bool is_well_formed_space(const Weights& w);

MonomialBasis enumerate_monomials(const Weights& w, const Integer& d);

Integer dim_weighted_space(const Weights& w, const Integer& d);

// Fano index I = |w| - d of a degree-d hypersurface in P(w); I = 1 is the
// anticanonical embedding. May be <= 0.
Integer fano_index(const Weights& w, const Integer& d);

// Milnor number of the link of a quasi-smooth degree-d hypersurface
// singularity: prod_i (d/w_i - 1), evaluated exactly.
Rational milnor_number_rational(const Weights& w, const Integer& d);

// Same product, demanding an integral result; throws NonIntegralError
// carrying the exact rational when the product is fractional.
Integer milnor_number(const Weights& w, const Integer& d);

}  // namespace wlink
