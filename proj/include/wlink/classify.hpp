#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wlink/divisor.hpp"
#include "wlink/moduli.hpp"

namespace wlink {

// Diffeomorphism type of the link under Smale's classification of closed
// simply connected spin 5-manifolds with torsion-free homology: S^5 when
// b2 = 0, the k-fold connected sum of S^2 x S^3 when b2 = k > 0. When a
// gate fails the type is Unclassified with the first failing gate named.
struct DiffeoType {
  enum class Kind { sphere5, connected_sum, unclassified };

  Kind kind = Kind::unclassified;
  Integer k = 0;       // valid for connected_sum
  std::string reason;  // valid for unclassified

  static DiffeoType sphere5();
  static DiffeoType connected_sum(Integer k);
  static DiffeoType unclassified(std::string reason);

  // "S5", "k#(S2xS3)", or "unclassified: <reason>".
  std::string str() const;

  friend bool operator==(const DiffeoType&, const DiffeoType&) = default;
};

// Complete analysis record for one (weights, degree) pair.
struct LinkReport {
  LinkReport(Weights w, Integer d)
      : weights(std::move(w)), degree(std::move(d)) {}

  Weights weights;
  Integer degree = 0;
  Integer fano_index = 0;
  bool well_formed = false;

  Rational milnor_number = 0;  // exact; integral iff milnor_integral
  bool milnor_integral = false;

  CyclotomicDivisor divisor;
  bool divisor_integral = false;

  // Present only when the divisor is integral.
  std::optional<CyclotomicMultiplicities> multiplicities;
  // Present when the divisor is integral and the coefficient sum is >= 0.
  std::optional<Integer> betti2;

  Integer dim_Sd = 0;
  Integer dim_G = 0;
  Integer dim_moduli = 0;

  DiffeoType diffeo_type;
  std::vector<std::string> diagnostics;
};

struct ScanQuery {
  Integer max_weight;
  std::set<Integer> fano_indices = {Integer(1)};
  std::optional<Integer> filter_b2;
  bool require_well_formed = true;
};

// Computes every invariant for (w, d) and applies the classification gates:
// (a) ambient space well-formed (stands in for torsion-free H2),
// (b) Milnor number integral,
// (c) divisor coefficients integral with non-negative sum,
// (d) all cyclotomic multiplicities non-negative.
// Simple connectivity and spin-ness are recorded as assumptions, not
// computed. Never throws for valid (w, d >= 1); failures land in the report.
LinkReport analyze(const Weights& w, const Integer& d);

// Analyzes every reduced tuple 1 <= w0 <= w1 <= w2 <= w3 <= max_weight at
// degree d = |w| - I for each requested index I, skipping d < 1, and applies
// the query filters. Output is ordered by (w0,w1,w2,w3,d) ascending and is a
// pure function of the query.
std::vector<LinkReport> scan(const ScanQuery& q);

}  // namespace wlink
