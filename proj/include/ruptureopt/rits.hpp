#pragma once

#include <optional>

#include "ruptureopt/torque_space.hpp"

namespace ruptureopt {

/// Radius of the hypersphere inscribed in the available torque space,
/// centered at the required torque tau_g.
struct RitsResult {
  double radius = 0.0;
  bool included = false;
  std::optional<int> limiting_facet;
  bool degenerate = false;
};

// tau_g exactly on the boundary counts as included with radius 0; strict
// exclusion requires the facet-sign product to fall below -kInclusionTol.
inline constexpr double kInclusionTol = 1e-9;

RitsResult calc_rits(const MomentArmMatrix& G, const TensionBounds& bounds,
                     const Vec& tau_g);

/// Support-function check of calc_rits: min over sampled unit directions
/// (plus all facet normals of T) of h(u) - u . tau_g. Equals the true radius
/// whenever the facet normals are in the sample.
double rits_oracle(const MomentArmMatrix& G, const TensionBounds& bounds,
                   const Vec& tau_g, int n_directions);

}  // namespace ruptureopt
