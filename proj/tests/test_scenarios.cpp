#include "doctest.h"
#include "ruptureopt/report.hpp"
#include "ruptureopt/scenarios.hpp"

using namespace ruptureopt;

TEST_CASE("scenario grid coverage") {
  const auto& scenarios = builtin_scenarios();
  int one_dof = 0, two_dof = 0;
  for (const auto& s : scenarios) {
    CHECK_NOTHROW(s.validate());
    CHECK(s.bounds.f_min.isZero());
    CHECK((s.bounds.f_max.array() == 200.0).all());
    CHECK(s.g_min == -0.1);
    CHECK(s.g_max == 0.1);
    if (s.joints == 1) {
      ++one_dof;
      CHECK(s.m_min == s.muscles);
      CHECK((s.tau_g[0] == 0.0 || s.tau_g[0] == -5.0));
    } else {
      ++two_dof;
      CHECK((s.m_min == s.muscles || s.m_min == s.muscles - 1));
    }
  }
  CHECK(one_dof == 8);
  CHECK(two_dof == 8);
  CHECK(find_scenario("table1/m4/tg-5") != nullptr);
  CHECK(find_scenario("table2/m5/mmin4/tg00") != nullptr);
  CHECK(find_scenario("nope") == nullptr);
}

TEST_CASE("design A stores the printed matrix divided by ten") {
  const NamedDesign* d = find_design("fig5/A");
  REQUIRE(d != nullptr);
  Mat expected(4, 2);
  expected << -0.05, -0.1, -0.05, 0.1, 0.1, -0.02, 0.1, 0.02;
  CHECK(d->G.entries.isApprox(expected, 1e-12));
  CHECK(d->problem.tau_g[0] == -5.0);
  CHECK(d->problem.tau_g[1] == 0.0);
  CHECK(d->problem.m_min == 4);
}

TEST_CASE("A-prime pushes every moment arm of A to full magnitude") {
  const NamedDesign* a = find_design("fig5/A");
  const NamedDesign* ap = find_design("fig5/A-prime");
  REQUIRE(a != nullptr);
  REQUIRE(ap != nullptr);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double v = a->G.entries(i, j);
      const double w = ap->G.entries(i, j);
      CHECK(std::abs(w) == doctest::Approx(0.1));
      CHECK(v * w > 0.0);  // signs preserved
    }
  }
}

TEST_CASE("the learned elbow Jacobian matches the published row") {
  const NamedDesign* d = find_design("table3/original");
  REQUIRE(d != nullptr);
  Vec first_joint(4);
  first_joint << -0.047, -0.026, 0.043, 0.042;
  CHECK(d->G.entries.col(0).isApprox(first_joint, 1e-12));
  CHECK(find_design("table3/mmin4") != nullptr);
  CHECK(find_design("table3/mmin3") != nullptr);
  CHECK(find_design("table3/mmin3")->problem.m_min == 3);
}

TEST_CASE("every named design round-trips through its text form") {
  for (const auto& d : builtin_designs()) {
    const std::string text = format_design(d.G);
    const MomentArmMatrix back = parse_design(text);
    CHECK(back.entries.isApprox(d.G.entries, 1e-12));
    CHECK(format_design(back) == text);
    CHECK_NOTHROW(d.problem.validate());
  }
}

TEST_CASE("published 1-DOF optima reach their scores") {
  const struct {
    const char* id;
    double e;
  } cases[] = {
      {"table1/m3/tg-5", 60.0},  {"table1/m4/tg-5", 105.0}, {"table1/m4/tg0", 120.0},
      {"table1/m5/tg-5", 200.0}, {"table1/m5/tg0", 200.0},  {"table1/m6/tg-5", 295.0},
      {"table1/m6/tg0", 300.0},
  };
  for (const auto& c : cases) {
    const NamedDesign* d = find_design(c.id);
    REQUIRE(d != nullptr);
    const auto& p = d->problem;
    const RobustnessEval ev = evaluate(d->G, p.bounds, p.tau_g, p.m_min);
    CHECK(ev.e == doctest::Approx(c.e).epsilon(1e-9));
    CHECK(!ev.no_solution());
  }
}

TEST_CASE("design A survives every single rupture") {
  const NamedDesign* d = find_design("fig5/A");
  REQUIRE(d != nullptr);
  const auto& p = d->problem;
  const RobustnessEval ev = evaluate(d->G, p.bounds, p.tau_g, p.m_min);
  CHECK(ev.e_count == 5);
  CHECK(ev.r[0] == doctest::Approx(22.3607).epsilon(1e-4));
  CHECK(ev.e == doctest::Approx(47.5769).epsilon(1e-4));
  for (int i = 0; i <= 4; ++i) CHECK(ev.r[i] > kPositiveRadiusTol);
}

TEST_CASE("the 5-muscle no-load optimum sits on a rupture boundary") {
  // rupturing muscle 3 leaves the two remaining wrist generators antiparallel
  // through tau_g: that radius is exactly 0, so only 5 of the 6 states count
  const NamedDesign* d = find_design("table2/m5/mmin5/tg00");
  REQUIRE(d != nullptr);
  const auto& p = d->problem;
  const RobustnessEval ev = evaluate(d->G, p.bounds, p.tau_g, p.m_min);
  REQUIRE(ev.r.size() == 6);
  CHECK(ev.r[0] == doctest::Approx(17.8885).epsilon(1e-4));
  CHECK(ev.r[3] <= kPositiveRadiusTol);
  CHECK(ev.e_count == 5);
  CHECK(ev.e == 0.0);  // gated: m_min = 5 demands all 6 states
}

TEST_CASE("the relaxed 2-DOF optima survive with one state to spare") {
  const NamedDesign* d = find_design("table2/m4/mmin3/tg-50");
  REQUIRE(d != nullptr);
  const auto& p = d->problem;
  const RobustnessEval ev = evaluate(d->G, p.bounds, p.tau_g, p.m_min);
  CHECK(ev.e_count == 4);  // exactly one zero radius
  CHECK(ev.e == doctest::Approx(62.4695).epsilon(1e-4));
}
