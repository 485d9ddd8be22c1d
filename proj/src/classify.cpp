#include "wlink/classify.hpp"

#include <utility>

namespace wlink {

DiffeoType DiffeoType::sphere5() {
  return DiffeoType{Kind::sphere5, 0, ""};
}

DiffeoType DiffeoType::connected_sum(Integer k) {
  return DiffeoType{Kind::connected_sum, std::move(k), ""};
}

DiffeoType DiffeoType::unclassified(std::string reason) {
  return DiffeoType{Kind::unclassified, 0, std::move(reason)};
}

std::string DiffeoType::str() const {
  switch (kind) {
    case Kind::sphere5:
      return "S5";
    case Kind::connected_sum:
      return k.str() + "#(S2xS3)";
    case Kind::unclassified:
      return "unclassified: " + reason;
  }
  return "unclassified: invalid state";
}

namespace {

// First leave-one-out triple of weights with gcd > 1, as a diagnostic string.
std::string failing_triple(const Weights& w) {
  for (std::size_t skip = 0; skip < 4; ++skip) {
    Integer g = 0;
    std::string triple;
    for (std::size_t i = 0; i < 4; ++i) {
      if (i == skip) continue;
      g = gcd(g, w[i]);
      triple += (triple.empty() ? "" : ",") + w[i].str();
    }
    if (g != 1) {
      return "gcd(" + triple + ") = " + g.str();
    }
  }
  return "";
}

bool matches_ascending(const Weights& w, std::array<int, 4> target) {
  const auto& s = w.ascending().values();
  for (std::size_t i = 0; i < 4; ++i) {
    if (s[i] != target[i]) return false;
  }
  return true;
}

}  // namespace

LinkReport analyze(const Weights& w, const Integer& d) {
  if (d < 1) {
    throw std::domain_error("degree must be >= 1");
  }

  LinkReport r(w, d);
  r.fano_index = fano_index(w, d);
  r.well_formed = is_well_formed_space(w);
  r.milnor_number = milnor_number_rational(w, d);
  r.milnor_integral = is_integer(r.milnor_number);
  r.divisor = milnor_orlik_divisor(w, d);
  r.divisor_integral = r.divisor.is_integral();

  Rational coeff_sum = 0;
  if (r.divisor_integral) {
    r.multiplicities = cyclotomic_expand(r.divisor);
    for (const auto& [index, coeff] : r.divisor.terms()) coeff_sum += coeff;
    if (coeff_sum >= 0) r.betti2 = numerator(coeff_sum);
  }

  const ModuliDim m = moduli_dim(w, d);
  r.dim_Sd = m.dim_Sd;
  r.dim_G = m.dim_G;
  r.dim_moduli = m.dim_moduli;

  // Inputs to the Smale classification that are true for every link in this
  // family but not computed here.
  r.diagnostics.push_back(
      "assumed: link is simply connected (link of an isolated hypersurface "
      "singularity in C^4)");
  r.diagnostics.push_back("assumed: link is spin");
  if (r.well_formed) {
    r.diagnostics.push_back(
        "H2 torsion-free: ambient weighted projective space is well-formed");
  } else {
    r.diagnostics.push_back("ambient space not well-formed: " +
                            failing_triple(w));
  }
  if (!r.milnor_integral) {
    r.diagnostics.push_back("non-integral Milnor number: " +
                            to_string(r.milnor_number));
  }
  if (!r.divisor_integral) {
    r.diagnostics.push_back("non-integral divisor: " + to_string(r.divisor));
  }
  if (r.dim_moduli < 0) {
    r.diagnostics.push_back(
        "moduli dimension is negative: automorphism group dimension exceeds "
        "dim S^d");
  }
  if (r.fano_index == 1 && matches_ascending(w, {1, 3, 5, 7}) && d == 15) {
    r.diagnostics.push_back(
        "moduli dimension counted on the open locus where the z1*z2*z3 "
        "coefficient is non-vanishing");
  }

  // Gates, in order; the first failure names the type.
  std::optional<Integer> negative_mult;
  if (r.multiplicities) {
    for (const auto& [j, mj] : r.multiplicities->mults) {
      if (mj < 0) {
        r.diagnostics.push_back("negative cyclotomic multiplicity: m_" +
                                j.str() + " = " + mj.str());
        negative_mult = j;
        break;
      }
    }
  }

  if (!r.well_formed) {
    r.diffeo_type = DiffeoType::unclassified("ambient space not well-formed");
  } else if (!r.milnor_integral) {
    r.diffeo_type = DiffeoType::unclassified("non-integral Milnor number");
  } else if (!r.divisor_integral) {
    r.diffeo_type = DiffeoType::unclassified("non-integral divisor");
  } else if (coeff_sum < 0) {
    r.diffeo_type = DiffeoType::unclassified(
        "inconsistent divisor (negative coefficient sum)");
  } else if (negative_mult) {
    r.diffeo_type =
        DiffeoType::unclassified("negative cyclotomic multiplicity");
  } else if (*r.betti2 == 0) {
    r.diffeo_type = DiffeoType::sphere5();
  } else {
    r.diffeo_type = DiffeoType::connected_sum(*r.betti2);
  }
  return r;
}

std::vector<LinkReport> scan(const ScanQuery& q) {
  if (q.max_weight < 1) {
    throw std::domain_error("max_weight must be >= 1");
  }
  if (q.fano_indices.empty()) {
    throw std::domain_error("at least one Fano index is required");
  }

  std::vector<LinkReport> out;
  for (Integer w0 = 1; w0 <= q.max_weight; ++w0) {
    for (Integer w1 = w0; w1 <= q.max_weight; ++w1) {
      for (Integer w2 = w1; w2 <= q.max_weight; ++w2) {
        for (Integer w3 = w2; w3 <= q.max_weight; ++w3) {
          if (gcd(gcd(w0, w1), gcd(w2, w3)) != 1) continue;
          const Weights w({w0, w1, w2, w3});
          // Descending index = ascending degree, keeping the stated order.
          for (auto it = q.fano_indices.rbegin(); it != q.fano_indices.rend();
               ++it) {
            const Integer d = w.total() - *it;
            if (d < 1) continue;
            LinkReport r = analyze(w, d);
            if (q.require_well_formed && !r.well_formed) continue;
            if (q.filter_b2 &&
                !(r.betti2 && *r.betti2 == *q.filter_b2)) {
              continue;
            }
            out.push_back(std::move(r));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace wlink
