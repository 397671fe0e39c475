#include "ruptureopt/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace ruptureopt {

namespace {

std::vector<Vec> dedupe_points(const std::vector<Vec>& points) {
  std::vector<Vec> sorted = points;
  std::sort(sorted.begin(), sorted.end(), [](const Vec& a, const Vec& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  });
  std::vector<Vec> out;
  for (const auto& p : sorted) {
    bool dup = false;
    // coincident points sort next to each other; a small window suffices
    for (size_t k = out.size(); k-- > 0 && out.size() - k <= 8;) {
      if ((p - out[k]).norm() <= kCoincidentTol) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(p);
  }
  return out;
}

// affine rank of the point set, with a relative singular-value cutoff
int affine_rank(const std::vector<Vec>& pts, Mat* basis_out = nullptr) {
  if (pts.size() < 2) return 0;
  const Eigen::Index dim = pts[0].size();
  Vec mean = Vec::Zero(dim);
  for (const auto& p : pts) mean += p;
  mean /= static_cast<double>(pts.size());
  Mat centered(pts.size(), dim);
  for (size_t i = 0; i < pts.size(); ++i) centered.row(i) = (pts[i] - mean).transpose();
  Eigen::JacobiSVD<Mat> svd(centered, Eigen::ComputeThinV);
  const Vec sv = svd.singularValues();
  const double cutoff = kCoincidentTol * std::max(1.0, sv.size() > 0 ? sv[0] : 0.0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > cutoff) ++rank;
  }
  if (basis_out) *basis_out = svd.matrixV();
  return rank;
}

double cross2(const Vec& o, const Vec& a, const Vec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

bool turns_left(const Vec& o, const Vec& a, const Vec& b) {
  const double c = cross2(o, a, b);
  const double scale = std::max(1.0, (a - o).norm() * (b - o).norm());
  return c > kCoincidentTol * scale;
}

ConvexPolytope hull_1d(const std::vector<Vec>& pts) {
  ConvexPolytope poly;
  poly.dimension = 1;
  double lo = pts[0][0], hi = pts[0][0];
  for (const auto& p : pts) {
    lo = std::min(lo, p[0]);
    hi = std::max(hi, p[0]);
  }
  if (hi - lo <= kCoincidentTol) {
    poly.full_dimensional = false;
    poly.vertices.push_back(Vec::Constant(1, lo));
    return poly;
  }
  poly.full_dimensional = true;
  poly.vertices.push_back(Vec::Constant(1, lo));
  poly.vertices.push_back(Vec::Constant(1, hi));
  poly.facets.push_back({Vec::Constant(1, 1.0), hi});
  poly.facets.push_back({Vec::Constant(1, -1.0), -lo});
  return poly;
}

ConvexPolytope hull_2d(const std::vector<Vec>& pts) {
  ConvexPolytope poly;
  poly.dimension = 2;
  // monotone chain, CCW; collinear points are dropped
  std::vector<Vec> sorted = pts;
  std::sort(sorted.begin(), sorted.end(), [](const Vec& a, const Vec& b) {
    return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
  });
  const size_t n = sorted.size();
  std::vector<Vec> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && !turns_left(hull[k - 2], hull[k - 1], sorted[i])) --k;
    hull[k++] = sorted[i];
  }
  const size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {
    while (k >= lower && !turns_left(hull[k - 2], hull[k - 1], sorted[i])) --k;
    hull[k++] = sorted[i];
  }
  hull.resize(k - 1);

  poly.full_dimensional = true;
  poly.vertices = hull;
  for (size_t i = 0; i < hull.size(); ++i) {
    const Vec& a = hull[i];
    const Vec& b = hull[(i + 1) % hull.size()];
    Vec edge = b - a;
    Vec normal(2);
    normal << edge[1], -edge[0];  // outward for a CCW polygon
    normal.normalize();
    poly.facets.push_back({normal, normal.dot(a)});
  }
  return poly;
}

struct Face {
  int a, b, c;
  Vec normal;
  double offset;
  bool alive = true;
};

Face make_face(const std::vector<Vec>& pts, int a, int b, int c, const Vec& interior) {
  Face f{a, b, c, Vec(), 0.0, true};
  Eigen::Vector3d u = (pts[b] - pts[a]).head<3>();
  Eigen::Vector3d v = (pts[c] - pts[a]).head<3>();
  Eigen::Vector3d n = u.cross(v);
  n.normalize();
  double off = n.dot(pts[a].head<3>());
  if (n.dot(interior.head<3>()) - off > 0) {
    std::swap(f.b, f.c);
    n = -n;
    off = -off;
  }
  f.normal = n;
  f.offset = off;
  return f;
}

ConvexPolytope hull_3d(const std::vector<Vec>& pts) {
  ConvexPolytope poly;
  poly.dimension = 3;
  poly.full_dimensional = true;

  // initial tetrahedron from spread-out points
  const int n = static_cast<int>(pts.size());
  int i0 = 0, i1 = -1, i2 = -1, i3 = -1;
  double best = -1;
  for (int i = 1; i < n; ++i) {
    const double d = (pts[i] - pts[i0]).norm();
    if (d > best) best = d, i1 = i;
  }
  best = -1;
  const Eigen::Vector3d dir = (pts[i1] - pts[i0]).head<3>();
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector3d w = (pts[i] - pts[i0]).head<3>();
    const double d = dir.cross(w).norm();
    if (d > best) best = d, i2 = i;
  }
  const Eigen::Vector3d n012 =
      dir.cross((pts[i2] - pts[i0]).head<3>()).normalized();
  best = -1;
  for (int i = 0; i < n; ++i) {
    const double d = std::abs(n012.dot((pts[i] - pts[i0]).head<3>()));
    if (d > best) best = d, i3 = i;
  }
  Vec interior = (pts[i0] + pts[i1] + pts[i2] + pts[i3]) / 4.0;

  std::vector<Face> faces;
  faces.push_back(make_face(pts, i0, i1, i2, interior));
  faces.push_back(make_face(pts, i0, i1, i3, interior));
  faces.push_back(make_face(pts, i0, i2, i3, interior));
  faces.push_back(make_face(pts, i1, i2, i3, interior));

  for (int p = 0; p < n; ++p) {
    if (p == i0 || p == i1 || p == i2 || p == i3) continue;
    std::vector<int> visible;
    for (size_t f = 0; f < faces.size(); ++f) {
      if (!faces[f].alive) continue;
      if (faces[f].normal.dot(pts[p]) - faces[f].offset > kFacetSideTol) {
        visible.push_back(static_cast<int>(f));
      }
    }
    if (visible.empty()) continue;
    // horizon = directed edges of visible faces whose reverse is not visible
    std::map<std::pair<int, int>, int> edge_count;
    for (int f : visible) {
      const Face& face = faces[f];
      const int e[3][2] = {{face.a, face.b}, {face.b, face.c}, {face.c, face.a}};
      for (auto& ed : e) edge_count[{ed[0], ed[1]}]++;
    }
    std::vector<std::pair<int, int>> horizon;
    for (const auto& [edge, cnt] : edge_count) {
      if (edge_count.count({edge.second, edge.first}) == 0) horizon.push_back(edge);
    }
    for (int f : visible) faces[f].alive = false;
    for (const auto& [a, b] : horizon) {
      faces.push_back(make_face(pts, a, b, p, interior));
    }
  }

  // merge coplanar triangles into unique facet planes
  for (const Face& f : faces) {
    if (!f.alive) continue;
    bool found = false;
    for (const Hyperplane& h : poly.facets) {
      if ((h.normal - f.normal).norm() <= kFacetSideTol &&
          std::abs(h.offset - f.offset) <= kFacetSideTol) {
        found = true;
        break;
      }
    }
    if (!found) poly.facets.push_back({f.normal, f.offset});
  }

  // a point is an extreme vertex iff it lies on >= 3 distinct facet planes
  std::vector<int> referenced;
  for (const Face& f : faces) {
    if (!f.alive) continue;
    referenced.push_back(f.a);
    referenced.push_back(f.b);
    referenced.push_back(f.c);
  }
  std::sort(referenced.begin(), referenced.end());
  referenced.erase(std::unique(referenced.begin(), referenced.end()), referenced.end());
  for (int idx : referenced) {
    int on = 0;
    for (const Hyperplane& h : poly.facets) {
      if (std::abs(signed_distance(pts[idx], h)) <= kFacetSideTol) ++on;
    }
    if (on >= 3) poly.vertices.push_back(pts[idx]);
  }
  return poly;
}

// extreme points of a rank-deficient set, found by hulling in the affine span
std::vector<Vec> degenerate_vertices(const std::vector<Vec>& pts, int rank) {
  if (rank == 0) return {pts[0]};
  Vec mean = Vec::Zero(pts[0].size());
  for (const auto& p : pts) mean += p;
  mean /= static_cast<double>(pts.size());
  Mat basis;
  affine_rank(pts, &basis);
  const Mat proj = basis.leftCols(rank);
  std::vector<Vec> low;
  low.reserve(pts.size());
  for (const auto& p : pts) low.push_back(proj.transpose() * (p - mean));
  ConvexPolytope sub = convex_hull(low, rank);
  std::vector<Vec> out;
  out.reserve(sub.vertices.size());
  for (const auto& v : sub.vertices) out.push_back(mean + proj * v);
  return out;
}

}  // namespace

Vec ConvexPolytope::vertex_mean() const {
  Vec mean = Vec::Zero(dimension);
  for (const auto& v : vertices) mean += v;
  return mean / static_cast<double>(vertices.size());
}

std::vector<Vec> hypercube_vertices(const Vec& f_min, const Vec& f_max) {
  const Eigen::Index m = f_min.size();
  if (f_max.size() != m) throw std::invalid_argument("bound vectors differ in length");
  if (m > 20) throw DimensionLimitError("hypercube enumeration limited to 20 dimensions");
  for (Eigen::Index i = 0; i < m; ++i) {
    if (f_min[i] > f_max[i]) throw std::invalid_argument("f_min exceeds f_max");
  }
  std::vector<Vec> out;
  out.reserve(size_t{1} << m);
  for (size_t k = 0; k < (size_t{1} << m); ++k) {
    Vec v(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      v[i] = (k >> i) & 1 ? f_max[i] : f_min[i];
    }
    out.push_back(std::move(v));
  }
  return out;
}

ConvexPolytope convex_hull(const std::vector<Vec>& points, int dim) {
  if (dim < 1 || dim > 3) {
    throw DimensionLimitError("convex hull supports dimensions 1 to 3 only");
  }
  if (points.empty()) throw std::invalid_argument("empty point set");
  for (const auto& p : points) {
    if (p.size() != dim) throw std::invalid_argument("point dimension mismatch");
    if (!p.allFinite()) throw std::invalid_argument("non-finite point");
  }

  const std::vector<Vec> pts = dedupe_points(points);
  const int rank = affine_rank(pts);
  if (rank < dim) {
    ConvexPolytope poly;
    poly.dimension = dim;
    poly.full_dimensional = false;
    poly.vertices = degenerate_vertices(pts, rank);
    return poly;
  }
  switch (dim) {
    case 1: return hull_1d(pts);
    case 2: return hull_2d(pts);
    default: return hull_3d(pts);
  }
}

double signed_distance(const Vec& point, const Hyperplane& plane) {
  if (point.size() != plane.normal.size()) {
    throw std::invalid_argument("point/plane dimension mismatch");
  }
  return plane.normal.dot(point) - plane.offset;
}

bool contains(const ConvexPolytope& poly, const Vec& point, double tol) {
  if (!poly.full_dimensional) {
    throw DegeneratePolytopeError("containment test on a degenerate polytope");
  }
  const Vec center = poly.vertex_mean();
  for (const auto& facet : poly.facets) {
    const double d1 = signed_distance(point, facet);
    const double d2 = signed_distance(center, facet);
    if (d1 * d2 < 0 && std::abs(d1) > tol) return false;
  }
  return true;
}

}  // namespace ruptureopt
