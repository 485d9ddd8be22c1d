#include "wlink/moduli.hpp"

namespace wlink {

AutGroupDim dim_autgroup(const Weights& w) {
  AutGroupDim dims{{}, 0};
  for (std::size_t i = 0; i < 4; ++i) {
    dims.per_coordinate[i] = dim_weighted_space(w, w[i]);
    dims.total += dims.per_coordinate[i];
  }
  return dims;
}

ModuliDim moduli_dim(const Weights& w, const Integer& d) {
  if (d < 1) {
    throw std::domain_error("degree must be >= 1");
  }
  ModuliDim m;
  m.dim_Sd = dim_weighted_space(w, d);
  m.dim_G = dim_autgroup(w).total;
  m.dim_moduli = m.dim_Sd - m.dim_G;
  return m;
}

}  // namespace wlink
