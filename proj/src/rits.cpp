#include "ruptureopt/rits.hpp"

#include <cmath>

namespace ruptureopt {

RitsResult calc_rits(const MomentArmMatrix& G, const TensionBounds& bounds,
                     const Vec& tau_g) {
  if (tau_g.size() != G.joints()) {
    throw std::invalid_argument("tau_g length does not match joint count");
  }
  RitsResult result;
  const ConvexPolytope torque_space = build_torque_polytope(G, bounds);
  if (!torque_space.full_dimensional) {
    // rank-deficient G cannot exert torque in every direction
    result.degenerate = true;
    return result;
  }

  const Vec center = torque_space.vertex_mean();
  result.included = true;
  double min_dist = std::numeric_limits<double>::infinity();
  int argmin = -1;
  for (size_t f = 0; f < torque_space.facets.size(); ++f) {
    const double d1 = signed_distance(tau_g, torque_space.facets[f]);
    const double d2 = signed_distance(center, torque_space.facets[f]);
    if (d1 * d2 < -kInclusionTol) result.included = false;
    if (std::abs(d1) < min_dist) {
      min_dist = std::abs(d1);
      argmin = static_cast<int>(f);
    }
  }
  if (!result.included) return result;
  result.radius = min_dist;
  result.limiting_facet = argmin;
  return result;
}

double rits_oracle(const MomentArmMatrix& G, const TensionBounds& bounds,
                   const Vec& tau_g, int n_directions) {
  const int n = G.joints();
  std::vector<Vec> directions;

  if (n == 1) {
    directions.push_back(Vec::Constant(1, 1.0));
    directions.push_back(Vec::Constant(1, -1.0));
  } else if (n == 2) {
    for (int k = 0; k < n_directions; ++k) {
      const double a = 2.0 * M_PI * k / n_directions;
      Vec u(2);
      u << std::cos(a), std::sin(a);
      directions.push_back(u);
    }
  } else {
    // Fibonacci sphere
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < n_directions; ++k) {
      const double z = 1.0 - 2.0 * (k + 0.5) / n_directions;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double a = golden * k;
      Vec u(3);
      u << r * std::cos(a), r * std::sin(a), z;
      directions.push_back(u);
    }
  }

  // directions annihilated by G expose rank deficiency: support is zero there
  Eigen::JacobiSVD<Mat> svd(G.entries, Eigen::ComputeFullV);
  const Vec sv = svd.singularValues();
  const double cutoff = 1e-12 * std::max(1.0, sv.size() > 0 ? sv[0] : 0.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i >= sv.size() || sv[i] <= cutoff) {
      directions.push_back(svd.matrixV().col(i));
      directions.push_back(-svd.matrixV().col(i));
    }
  }

  const ConvexPolytope torque_space = build_torque_polytope(G, bounds);
  for (const auto& facet : torque_space.facets) directions.push_back(facet.normal);

  double min_margin = std::numeric_limits<double>::infinity();
  for (const auto& u : directions) {
    min_margin = std::min(min_margin, support_function(G, bounds, u) - u.dot(tau_g));
  }
  if (min_margin < -kInclusionTol) return 0.0;  // tau_g outside T
  return std::max(min_margin, 0.0);
}

}  // namespace ruptureopt
