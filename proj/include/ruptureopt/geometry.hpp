#pragma once

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ruptureopt {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Geometric tolerances. Inputs are torques of magnitude <= ~100 Nm, so
// doubles leave plenty of headroom below these.
inline constexpr double kCoincidentTol = 1e-9;  // point/plane coincidence
inline constexpr double kFacetSideTol = 1e-7;   // facet-side membership

struct DimensionLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegeneratePolytopeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Hyperplane {x : normal . x = offset} with unit-length normal.
struct Hyperplane {
  Vec normal;
  double offset = 0.0;
};

/// Convex polytope in joint-torque space. Facets are outward oriented and
/// empty when the vertex set does not span the full dimension.
struct ConvexPolytope {
  std::vector<Vec> vertices;
  std::vector<Hyperplane> facets;
  int dimension = 0;
  bool full_dimensional = false;

  Vec vertex_mean() const;
};

/// All 2^M corners of the box [f_min, f_max], in binary counting order
/// (bit i of the counter selects component i: set -> f_max).
std::vector<Vec> hypercube_vertices(const Vec& f_min, const Vec& f_max);

/// Convex hull for dim in {1,2,3}. Duplicates within kCoincidentTol are
/// merged and collinear boundary points dropped, so the vertex list holds
/// exactly the extreme points of the input.
ConvexPolytope convex_hull(const std::vector<Vec>& points, int dim);

/// normal . point - offset; positive on the normal's side.
double signed_distance(const Vec& point, const Hyperplane& plane);

/// Point-inclusion test against all facets, using the vertex mean as the
/// guaranteed interior reference. Boundary points within tol count as inside.
bool contains(const ConvexPolytope& poly, const Vec& point,
              double tol = kFacetSideTol);

}  // namespace ruptureopt
