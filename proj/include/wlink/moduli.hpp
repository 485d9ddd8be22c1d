#pragma once

#include <array>

#include "wlink/wps.hpp"

namespace wlink {

// Dimension of the group G(w) of graded-ring automorphisms
//
//     z_i  ->  f_i(z0,z1,z2,z3),   f_i weighted homogeneous of degree w_i,
//
// so the i-th coordinate contributes dim S^{w_i}(w) parameters. Each entry
// is >= 1 (the diagonal scaling z_i -> a_i z_i always exists).
struct AutGroupDim {
  std::array<Integer, 4> per_coordinate;
  Integer total;
};

// Parameter count of degree-d hypersurfaces modulo G(w). Both sides are
// counted before projectivization; the difference is the same either way.
// dim_moduli may be negative; consumers flag that case.
struct ModuliDim {
  Integer dim_Sd;
  Integer dim_G;
  Integer dim_moduli;
};

AutGroupDim dim_autgroup(const Weights& w);

ModuliDim moduli_dim(const Weights& w, const Integer& d);

}  // namespace wlink
