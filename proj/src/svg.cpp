#include "ruptureopt/svg.hpp"

#include "ruptureopt/evaluation.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace ruptureopt {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

double fit_half_extent(const ConvexPolytope& poly, const Vec& tau_g) {
  double extent = 1.0;
  for (const auto& v : poly.vertices) {
    extent = std::max(extent, (v - tau_g).cwiseAbs().maxCoeff());
  }
  return extent * 1.1;
}

std::string render_torque_panel(const ConvexPolytope& poly, const Vec& tau_g,
                                const RitsResult& rits, const PanelStyle& style) {
  const double scale = style.px_per_nm;
  const double half = style.half_extent_nm;
  const double size = 2.0 * half * scale;
  auto px = [&](double x) { return (x - (tau_g[0] - half)) * scale; };
  auto py = [&](double y) { return ((tau_g[1] + half) - y) * scale; };  // y up

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"yes\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << num(size) << "\" height=\"" << num(size) << "\" viewBox=\"0 0 "
      << num(size) << " " << num(size) << "\">\n";
  svg << "<rect width=\"" << num(size) << "\" height=\"" << num(size)
      << "\" fill=\"white\"/>\n";

  svg << "<polygon points=\"";
  for (size_t i = 0; i < poly.vertices.size(); ++i) {
    if (i) svg << " ";
    svg << num(px(poly.vertices[i][0])) << "," << num(py(poly.vertices[i][1]));
  }
  svg << "\" fill=\"none\" stroke=\"red\" stroke-width=\"2\"/>\n";

  if (rits.included && rits.radius > kPositiveRadiusTol) {
    svg << "<circle cx=\"" << num(px(tau_g[0])) << "\" cy=\"" << num(py(tau_g[1]))
        << "\" r=\"" << num(rits.radius * scale)
        << "\" fill=\"none\" stroke=\"blue\" stroke-width=\"2\"/>\n";
  }

  // center marker at tau_g
  const double cx = px(tau_g[0]), cy = py(tau_g[1]), arm = 6.0;
  svg << "<path d=\"M " << num(cx - arm) << " " << num(cy) << " L " << num(cx + arm)
      << " " << num(cy) << " M " << num(cx) << " " << num(cy - arm) << " L "
      << num(cx) << " " << num(cy + arm)
      << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  const bool ok = rits.included && !rits.degenerate;
  svg << "<text x=\"" << num(size - 30.0) << "\" y=\"30\" font-size=\"28\" fill=\""
      << (ok ? "green" : "red") << "\">" << (ok ? "&#10003;" : "&#10007;")
      << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace ruptureopt
