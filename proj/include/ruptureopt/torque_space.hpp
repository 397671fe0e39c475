#pragma once

#include "ruptureopt/geometry.hpp"

namespace ruptureopt {

/// Muscle Jacobian G: M rows (muscles) x N columns (joints), entries in meters.
struct MomentArmMatrix {
  Mat entries;

  int muscles() const { return static_cast<int>(entries.rows()); }
  int joints() const { return static_cast<int>(entries.cols()); }
};

/// Per-muscle tension box [f_min, f_max], newtons. Muscles only pull, so
/// 0 <= f_min <= f_max elementwise.
struct TensionBounds {
  Vec f_min;
  Vec f_max;
};

void validate(const MomentArmMatrix& G);
void validate(const TensionBounds& bounds, int muscle_count);

/// Available torque space T = {-G^T f : f in the tension box}, as the convex
/// hull of the projected box corners. T is a zonotope, centrally symmetric
/// about zonotope_center().
ConvexPolytope build_torque_polytope(const MomentArmMatrix& G,
                                     const TensionBounds& bounds);

/// Copy of G with row `muscle_index` (1-based) zeroed: that muscle carries
/// no tension.
MomentArmMatrix rupture(const MomentArmMatrix& G, int muscle_index);

/// max over f in the box of u . (-G^T f), evaluated analytically per muscle.
/// Independent of the hull path; used as a test oracle for T.
double support_function(const MomentArmMatrix& G, const TensionBounds& bounds,
                        const Vec& u);

Vec zonotope_center(const MomentArmMatrix& G, const TensionBounds& bounds);

}  // namespace ruptureopt
