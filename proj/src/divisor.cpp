#include "wlink/divisor.hpp"

#include <utility>
#include <vector>

namespace wlink {

namespace {

void add_term(std::map<Integer, Rational>& terms, const Integer& index,
              const Rational& coeff) {
  auto it = terms.find(index);
  if (it == terms.end()) {
    if (coeff != 0) terms.emplace(index, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms.erase(it);
}

// Divisors of n in ascending order, by trial division.
std::vector<Integer> divisors_of(const Integer& n) {
  std::vector<Integer> small, large;
  for (Integer i = 1; i * i <= n; ++i) {
    if (n % i != 0) continue;
    small.push_back(i);
    if (i * i != n) large.push_back(n / i);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

CyclotomicDivisor::CyclotomicDivisor(std::map<Integer, Rational> terms)
    : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first < 1) {
      throw std::domain_error("divisor index must be >= 1");
    }
    it = (it->second == 0) ? terms_.erase(it) : std::next(it);
  }
}

Rational CyclotomicDivisor::coefficient(const Integer& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool CyclotomicDivisor::is_integral() const {
  for (const auto& [index, coeff] : terms_) {
    if (!is_integer(coeff)) return false;
  }
  return true;
}

CyclotomicDivisor lambda(const Integer& i) {
  if (i < 1) {
    throw std::domain_error("lambda index must be >= 1");
  }
  return CyclotomicDivisor({{i, Rational(1)}});
}

CyclotomicDivisor add(const CyclotomicDivisor& x, const CyclotomicDivisor& y) {
  std::map<Integer, Rational> terms = x.terms();
  for (const auto& [index, coeff] : y.terms()) {
    add_term(terms, index, coeff);
  }
  return CyclotomicDivisor(std::move(terms));
}

CyclotomicDivisor mul(const CyclotomicDivisor& x, const CyclotomicDivisor& y) {
  // Bilinear extension of Lambda_a * Lambda_b = gcd(a,b) Lambda_lcm(a,b).
  std::map<Integer, Rational> terms;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      add_term(terms, lcm(a, b), ca * cb * gcd(a, b));
    }
  }
  return CyclotomicDivisor(std::move(terms));
}

Rational degree(const CyclotomicDivisor& x) {
  Rational total = 0;
  for (const auto& [index, coeff] : x.terms()) {
    total += coeff * Rational(index);
  }
  return total;
}

CyclotomicDivisor milnor_orlik_divisor(const Weights& w, const Integer& d) {
  if (d < 1) {
    throw std::domain_error("degree must be >= 1");
  }
  CyclotomicDivisor product = lambda(1);
  for (std::size_t i = 0; i < 4; ++i) {
    const Rational ratio = reduce_fraction(d, w[i]);
    const Integer u = numerator(ratio);
    const Integer v = denominator(ratio);
    CyclotomicDivisor factor =
        add(CyclotomicDivisor({{u, Rational(1) / v}}),
            CyclotomicDivisor({{Integer(1), Rational(-1)}}));
    product = mul(product, factor);
  }
  return product;
}

LinkBetti betti2(const CyclotomicDivisor& x) {
  Rational sum = 0;
  for (const auto& [index, coeff] : x.terms()) {
    if (!is_integer(coeff)) {
      throw NonIntegralError(
          "non-integral divisor coefficient " + to_string(coeff) +
              " at Lambda_" + index.str(),
          coeff);
    }
    sum += coeff;
  }
  if (sum < 0) {
    throw std::domain_error("inconsistent divisor: coefficient sum " +
                            to_string(sum) + " is negative");
  }
  return LinkBetti{numerator(sum)};
}

CyclotomicMultiplicities cyclotomic_expand(const CyclotomicDivisor& x) {
  // Every Lambda_i contributes its coefficient to m_j for each j | i.
  std::map<Integer, Integer> mults;
  for (const auto& [index, coeff] : x.terms()) {
    if (!is_integer(coeff)) {
      throw NonIntegralError(
          "non-integral divisor coefficient " + to_string(coeff) +
              " at Lambda_" + index.str(),
          coeff);
    }
    for (const Integer& j : divisors_of(index)) {
      mults[j] += numerator(coeff);
    }
  }
  for (auto it = mults.begin(); it != mults.end();) {
    it = (it->second == 0) ? mults.erase(it) : std::next(it);
  }
  return CyclotomicMultiplicities{std::move(mults)};
}

std::string to_string(const CyclotomicDivisor& x) {
  if (x.is_zero()) return "0";
  std::string out;
  // Highest index first, matching the usual way these products are written.
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const auto& [index, coeff] = *it;
    const bool negative = coeff < 0;
    const Rational mag = negative ? Rational(-coeff) : coeff;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += "L" + index.str();
  }
  return out;
}

}  // namespace wlink
