#include "ruptureopt/scenarios.hpp"

#include <cmath>

namespace ruptureopt {

namespace {

DesignProblem make_problem(std::string id, int joints, int muscles, int m_min,
                           std::vector<double> tau_g) {
  DesignProblem p;
  p.id = std::move(id);
  p.joints = joints;
  p.muscles = muscles;
  p.m_min = m_min;
  p.tau_g = Eigen::Map<Vec>(tau_g.data(), static_cast<Eigen::Index>(tau_g.size()));
  p.bounds = default_bounds(muscles);
  return p;
}

// rows = the printed 10 G^T (N rows of M entries); stored G is M x N in meters
MomentArmMatrix from_table(std::initializer_list<std::initializer_list<double>> rows) {
  const int n = static_cast<int>(rows.size());
  const int m = static_cast<int>(rows.begin()->size());
  MomentArmMatrix G;
  G.entries = Mat(m, n);
  int j = 0;
  for (const auto& row : rows) {
    int i = 0;
    for (double v : row) G.entries(i++, j) = v / 10.0;
    ++j;
  }
  return G;
}

NamedDesign make_design(std::string id, std::string source, MomentArmMatrix G,
                        int m_min, std::vector<double> tau_g) {
  NamedDesign d;
  d.label = id;
  d.source = std::move(source);
  d.problem = make_problem(std::move(id), static_cast<int>(G.entries.cols()),
                           static_cast<int>(G.entries.rows()), m_min, std::move(tau_g));
  d.G = std::move(G);
  return d;
}

std::vector<DesignProblem> build_scenarios() {
  std::vector<DesignProblem> out;
  for (int m : {3, 4, 5, 6}) {
    const std::string base = "table1/m" + std::to_string(m);
    out.push_back(make_problem(base + "/tg-5", 1, m, m, {-5.0}));
    out.push_back(make_problem(base + "/tg0", 1, m, m, {0.0}));
  }
  for (int m : {4, 5}) {
    for (int m_min : {m, m - 1}) {
      const std::string base =
          "table2/m" + std::to_string(m) + "/mmin" + std::to_string(m_min);
      out.push_back(make_problem(base + "/tg-50", 2, m, m_min, {-5.0, 0.0}));
      out.push_back(make_problem(base + "/tg00", 2, m, m_min, {0.0, 0.0}));
    }
  }
  return out;
}

std::vector<NamedDesign> build_designs() {
  std::vector<NamedDesign> out;

  out.push_back(make_design("table1/m3/tg-5", "1-DOF optimum, 3 muscles",
                            from_table({{-1, 1, 1}}), 3, {-5.0}));
  out.push_back(make_design("table1/m4/tg-5", "1-DOF optimum, 4 muscles",
                            from_table({{-1, 1, 1, 1}}), 4, {-5.0}));
  out.push_back(make_design("table1/m4/tg0", "1-DOF optimum, 4 muscles, no load",
                            from_table({{-1, -1, 1, 1}}), 4, {0.0}));
  out.push_back(make_design("table1/m5/tg-5", "1-DOF optimum, 5 muscles",
                            from_table({{-1, -1, 1, 1, 1}}), 5, {-5.0}));
  out.push_back(make_design("table1/m5/tg0", "1-DOF optimum, 5 muscles, no load",
                            from_table({{-1, -1, 1, 1, 1}}), 5, {0.0}));
  out.push_back(make_design("table1/m6/tg-5", "1-DOF optimum, 6 muscles",
                            from_table({{-1, -1, -1, 1, 1, 1}}), 6, {-5.0}));
  out.push_back(make_design("table1/m6/tg0", "1-DOF optimum, 6 muscles, no load",
                            from_table({{-1, -1, -1, 1, 1, 1}}), 6, {0.0}));

  const MomentArmMatrix design_a =
      from_table({{-0.5, -0.5, 1, 1}, {-1, 1, -0.2, 0.2}});
  out.push_back(make_design("table2/m4/mmin4/tg-50", "2-DOF optimum (design A)",
                            design_a, 4, {-5.0, 0.0}));
  out.push_back(make_design("table2/m4/mmin3/tg-50", "2-DOF optimum",
                            from_table({{-1, 0.7, 0.8, 0.8}, {0, 1, -1, 1}}), 3,
                            {-5.0, 0.0}));
  out.push_back(make_design("table2/m5/mmin5/tg-50", "2-DOF optimum",
                            from_table({{-1, 0.2, 0.6, 1, 1}, {-0.4, 1, 1, -1, -0.9}}),
                            5, {-5.0, 0.0}));
  out.push_back(make_design("table2/m5/mmin5/tg00", "2-DOF optimum",
                            from_table({{-1, -0.8, 0, 0.8, 1}, {-0.5, 1, -1, 1, 0.5}}),
                            5, {0.0, 0.0}));
  out.push_back(make_design("table2/m5/mmin4/tg-50", "2-DOF optimum",
                            from_table({{-1, -1, 0.7, 0.8, 0.9}, {0, 0.1, -1, 1, -1}}),
                            4, {-5.0, 0.0}));
  out.push_back(make_design("table2/m5/mmin4/tg00", "2-DOF optimum",
                            from_table({{-1, -1, 0.5, 1, 1}, {-0.4, 0.4, -1, -1, 1}}),
                            4, {0.0, 0.0}));

  out.push_back(make_design("fig5/A", "2-DOF optimum (design A)", design_a, 4,
                            {-5.0, 0.0}));
  // A': every moment arm of A pushed to full magnitude, signs kept
  MomentArmMatrix a_prime = design_a;
  a_prime.entries = design_a.entries.unaryExpr(
      [](double v) { return v == 0.0 ? 0.0 : std::copysign(0.1, v); });
  out.push_back(make_design("fig5/A-prime", "design A at maximum moment arms",
                            std::move(a_prime), 4, {-5.0, 0.0}));

  out.push_back(make_design(
      "table3/original", "Musashi elbow, learned Jacobian, original arrangement",
      from_table({{-0.47, -0.26, 0.43, 0.42}, {-0.17, 0.20, -0.15, 0.24}}), 4,
      {-5.0, 0.0}));
  out.push_back(make_design(
      "table3/mmin4", "Musashi elbow, learned Jacobian, arrangement from the m_min=4 optimum",
      from_table({{-0.18, -0.29, 0.61, 0.43}, {-0.10, 0.20, -0.043, 0.036}}), 4,
      {-5.0, 0.0}));
  out.push_back(make_design(
      "table3/mmin3", "Musashi elbow, learned Jacobian, arrangement from the m_min=3 optimum",
      from_table({{-0.47, 0.50, 0.66, 0.73}, {0.047, -0.19, -0.30, 0.18}}), 3,
      {-5.0, 0.0}));
  return out;
}

}  // namespace

const std::vector<DesignProblem>& builtin_scenarios() {
  static const std::vector<DesignProblem> scenarios = build_scenarios();
  return scenarios;
}

const std::vector<NamedDesign>& builtin_designs() {
  static const std::vector<NamedDesign> designs = build_designs();
  return designs;
}

const DesignProblem* find_scenario(const std::string& id) {
  for (const auto& s : builtin_scenarios()) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

const NamedDesign* find_design(const std::string& id) {
  for (const auto& d : builtin_designs()) {
    if (d.label == id) return &d;
  }
  return nullptr;
}

}  // namespace ruptureopt
