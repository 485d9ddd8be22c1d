#pragma once

// Test-only oracles. Each one recomputes a quantity from first principles,
// independent of the library code path it is used to check.

#include <array>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "wlink/divisor.hpp"
#include "wlink/wps.hpp"

namespace oracle {

// Full nested scan over all exponent vectors with a_i <= d / w_i, keeping
// those of exact weighted degree d. Small inputs only.
inline std::vector<std::array<long long, 4>> monomials_by_scan(
    const std::array<long long, 4>& w, long long d) {
  std::vector<std::array<long long, 4>> out;
  for (long long a0 = 0; a0 <= d / w[0]; ++a0)
    for (long long a1 = 0; a1 <= d / w[1]; ++a1)
      for (long long a2 = 0; a2 <= d / w[2]; ++a2)
        for (long long a3 = 0; a3 <= d / w[3]; ++a3)
          if (a0 * w[0] + a1 * w[1] + a2 * w[2] + a3 * w[3] == d)
            out.push_back({a0, a1, a2, a3});
  return out;
}

// Smallest positive common multiple found by counting upward.
inline long long lcm_by_search(long long a, long long b) {
  for (long long m = 1;; ++m)
    if (m % a == 0 && m % b == 0) return m;
}

inline long long euler_phi(long long n) {
  long long result = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

// --- root multisets -------------------------------------------------------
//
// A divisor on C* expanded into actual roots of unity. The root
// e^{2*pi*i*p/q} is keyed by the reduced fraction p/q, 0 <= p < q.
// Lambda_i expands by definition into the i-th roots of unity, and the
// group-ring product adds angles mod 1. The gcd/lcm product shortcut is
// never used here.

using Angle = std::pair<long long, long long>;
using RootMultiset = std::map<Angle, wlink::Rational>;

inline Angle reduce_angle(long long p, long long q) {
  p %= q;
  if (p < 0) p += q;
  const long long g = std::gcd(p, q);
  return {p / g, q / g};
}

inline RootMultiset roots_of_lambda(long long i) {
  RootMultiset roots;
  for (long long k = 0; k < i; ++k) {
    roots[reduce_angle(k, i)] += 1;
  }
  return roots;
}

inline void drop_zeros(RootMultiset& roots) {
  for (auto it = roots.begin(); it != roots.end();) {
    it = (it->second == 0) ? roots.erase(it) : std::next(it);
  }
}

inline RootMultiset expand_to_roots(const wlink::CyclotomicDivisor& x) {
  RootMultiset roots;
  for (const auto& [index, coeff] : x.terms()) {
    const long long i = index.convert_to<long long>();
    for (const auto& [angle, mult] : roots_of_lambda(i)) {
      roots[angle] += coeff * mult;
    }
  }
  drop_zeros(roots);
  return roots;
}

inline RootMultiset multiply_roots(const RootMultiset& a,
                                   const RootMultiset& b) {
  RootMultiset product;
  for (const auto& [angle_a, mult_a] : a) {
    for (const auto& [angle_b, mult_b] : b) {
      const Angle sum = reduce_angle(
          angle_a.first * angle_b.second + angle_b.first * angle_a.second,
          angle_a.second * angle_b.second);
      product[sum] += mult_a * mult_b;
    }
  }
  drop_zeros(product);
  return product;
}

// Multiplicity of one chosen primitive j-th root (e^{2*pi*i/j}, or 1 when
// j = 1) in the multiset.
inline wlink::Rational primitive_root_multiplicity(const RootMultiset& roots,
                                                   long long j) {
  const Angle angle = (j == 1) ? Angle{0, 1} : Angle{1, j};
  auto it = roots.find(angle);
  return it == roots.end() ? wlink::Rational(0) : it->second;
}

// All reduced ascending weight tuples with entries in [1, max].
inline std::vector<std::array<long long, 4>> reduced_tuples(long long max) {
  std::vector<std::array<long long, 4>> tuples;
  for (long long w0 = 1; w0 <= max; ++w0)
    for (long long w1 = w0; w1 <= max; ++w1)
      for (long long w2 = w1; w2 <= max; ++w2)
        for (long long w3 = w2; w3 <= max; ++w3)
          if (std::gcd(std::gcd(w0, w1), std::gcd(w2, w3)) == 1)
            tuples.push_back({w0, w1, w2, w3});
  return tuples;
}

}  // namespace oracle
