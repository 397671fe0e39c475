#pragma once

#include <string>

#include "ruptureopt/rits.hpp"

namespace ruptureopt {

/// Rendering parameters for a 2-D torque-space panel. A fixed pixel scale and
/// a shared half-extent keep panels of different rupture states comparable.
struct PanelStyle {
  double px_per_nm = 40.0;
  double half_extent_nm = 10.0;  // viewBox covers tau_g +/- this
};

/// Half-extent that fits every vertex of the polytope around tau_g.
double fit_half_extent(const ConvexPolytope& poly, const Vec& tau_g);

/// Standalone SVG 1.1 document: red polytope boundary, blue inscribed circle
/// centered at tau_g (omitted at radius 0), center marker, and an
/// included/excluded badge.
std::string render_torque_panel(const ConvexPolytope& poly, const Vec& tau_g,
                                const RitsResult& rits, const PanelStyle& style);

}  // namespace ruptureopt
