#include "ruptureopt/torque_space.hpp"

#include <cmath>

namespace ruptureopt {

void validate(const MomentArmMatrix& G) {
  if (G.muscles() < 1 || G.joints() < 1) {
    throw std::invalid_argument("moment-arm matrix needs at least one muscle and joint");
  }
  if (!G.entries.allFinite()) {
    throw std::invalid_argument("non-finite moment-arm entry");
  }
}

void validate(const TensionBounds& bounds, int muscle_count) {
  if (bounds.f_min.size() != muscle_count || bounds.f_max.size() != muscle_count) {
    throw std::invalid_argument("tension bound length does not match muscle count");
  }
  for (int i = 0; i < muscle_count; ++i) {
    if (!(bounds.f_min[i] >= 0 && bounds.f_min[i] <= bounds.f_max[i])) {
      throw std::invalid_argument("tension bounds must satisfy 0 <= f_min <= f_max");
    }
  }
}

ConvexPolytope build_torque_polytope(const MomentArmMatrix& G,
                                     const TensionBounds& bounds) {
  validate(G);
  validate(bounds, G.muscles());
  const int n = G.joints();
  if (n > 3) throw DimensionLimitError("torque space limited to 3 joints");

  const Mat neg_gt = -G.entries.transpose();
  std::vector<Vec> points;
  for (const Vec& corner : hypercube_vertices(bounds.f_min, bounds.f_max)) {
    points.push_back(neg_gt * corner);
  }
  return convex_hull(points, n);
}

MomentArmMatrix rupture(const MomentArmMatrix& G, int muscle_index) {
  if (muscle_index < 1 || muscle_index > G.muscles()) {
    throw std::out_of_range("muscle index out of range");
  }
  MomentArmMatrix out = G;
  out.entries.row(muscle_index - 1).setZero();
  return out;
}

double support_function(const MomentArmMatrix& G, const TensionBounds& bounds,
                        const Vec& u) {
  const Vec w = -G.entries * u;  // per-muscle torque coefficient along u
  double h = 0.0;
  for (int i = 0; i < G.muscles(); ++i) {
    h += bounds.f_max[i] * std::max(w[i], 0.0) + bounds.f_min[i] * std::min(w[i], 0.0);
  }
  return h;
}

Vec zonotope_center(const MomentArmMatrix& G, const TensionBounds& bounds) {
  return -G.entries.transpose() * (bounds.f_min + bounds.f_max) / 2.0;
}

}  // namespace ruptureopt
