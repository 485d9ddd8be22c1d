#include "wlink/wps.hpp"

#include <algorithm>
#include <cassert>

namespace wlink {

Weights::Weights(const std::array<Integer, 4>& w) : w_(w) {
  for (const Integer& v : w_) {
    if (v < 1) {
      throw std::domain_error("weights must be positive");
    }
  }
  Integer g = gcd(gcd(w_[0], w_[1]), gcd(w_[2], w_[3]));
  if (g != 1) {
    throw std::domain_error("weights not reduced (common factor " + g.str() +
                            ")");
  }
}

Integer Weights::total() const { return w_[0] + w_[1] + w_[2] + w_[3]; }

Weights Weights::ascending() const {
  std::array<Integer, 4> s = w_;
  std::sort(s.begin(), s.end());
  return Weights(s);
}

Weights make_weights(const std::array<Integer, 4>& values) {
  return Weights(values);
}

Integer ExponentVector::weighted_degree(const Weights& w) const {
  return a[0] * w[0] + a[1] * w[1] + a[2] * w[2] + a[3] * w[3];
}

bool canonical_less(const ExponentVector& x, const ExponentVector& y) {
  return y.a < x.a;
}

bool is_well_formed_space(const Weights& w) {
  // gcd of each leave-one-out triple must be 1.
  for (std::size_t skip = 0; skip < 4; ++skip) {
    Integer g = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      if (i != skip) g = gcd(g, w[i]);
    }
    if (g != 1) return false;
  }
  return true;
}

MonomialBasis enumerate_monomials(const Weights& w, const Integer& d) {
  if (d < 0) {
    throw std::domain_error("degree must be non-negative");
  }
  // Bounded loops over a3, a2, a1; a0 is forced by the remainder, which
  // must be divisible by w0.
  std::vector<ExponentVector> out;
  for (Integer a3 = 0; a3 * w[3] <= d; ++a3) {
    const Integer r3 = d - a3 * w[3];
    for (Integer a2 = 0; a2 * w[2] <= r3; ++a2) {
      const Integer r2 = r3 - a2 * w[2];
      for (Integer a1 = 0; a1 * w[1] <= r2; ++a1) {
        const Integer r1 = r2 - a1 * w[1];
        if (r1 % w[0] != 0) continue;
        out.push_back(ExponentVector{{r1 / w[0], a1, a2, a3}});
        assert(out.back().weighted_degree(w) == d);
      }
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return MonomialBasis{w, d, std::move(out)};
}

Integer dim_weighted_space(const Weights& w, const Integer& d) {
  return Integer(enumerate_monomials(w, d).monomials.size());
}

Integer fano_index(const Weights& w, const Integer& d) {
  if (d < 1) {
    throw std::domain_error("degree must be >= 1");
  }
  return w.total() - d;
}

Rational milnor_number_rational(const Weights& w, const Integer& d) {
  if (d < 1) {
    throw std::domain_error("degree must be >= 1");
  }
  Rational mu = 1;
  for (std::size_t i = 0; i < 4; ++i) {
    mu *= reduce_fraction(d, w[i]) - 1;
  }
  return mu;
}

Integer milnor_number(const Weights& w, const Integer& d) {
  Rational mu = milnor_number_rational(w, d);
  if (!is_integer(mu)) {
    throw NonIntegralError("non-integral Milnor number " + to_string(mu), mu);
  }
  return numerator(mu);
}

}  // namespace wlink
