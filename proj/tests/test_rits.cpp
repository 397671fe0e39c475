#include <algorithm>
#include <random>

#include "doctest.h"
#include "ruptureopt/problem.hpp"
#include "ruptureopt/rits.hpp"
#include "test_util.hpp"

using namespace ruptureopt;

namespace {

MomentArmMatrix mat1(std::initializer_list<double> col) {
  MomentArmMatrix G;
  G.entries = Mat(static_cast<int>(col.size()), 1);
  int i = 0;
  for (double v : col) G.entries(i++, 0) = v;
  return G;
}

Vec tau1(double x) { return Vec::Constant(1, x); }

}  // namespace

TEST_CASE("rits worked examples on the 1-DOF interval") {
  // G^T = (-1, 1, 1, 1)/10 -> T = [-60, 20]
  const MomentArmMatrix G = mat1({-0.1, 0.1, 0.1, 0.1});
  const TensionBounds b = default_bounds(4);

  SUBCASE("interior target") {
    const RitsResult r = calc_rits(G, b, tau1(-5.0));
    CHECK(r.included);
    CHECK(!r.degenerate);
    CHECK(r.radius == doctest::Approx(25.0).epsilon(1e-12));
    CHECK(r.limiting_facet.has_value());
  }
  SUBCASE("target on the boundary") {
    const RitsResult r = calc_rits(G, b, tau1(20.0));
    CHECK(r.included);
    CHECK(r.radius == doctest::Approx(0.0));
  }
  SUBCASE("target outside") {
    const RitsResult r = calc_rits(G, b, tau1(30.0));
    CHECK(!r.included);
    CHECK(r.radius == 0.0);
  }
}

TEST_CASE("degenerate torque space gives zero radius") {
  MomentArmMatrix G;
  G.entries = Mat::Zero(4, 2);
  const RitsResult r = calc_rits(G, default_bounds(4), Vec::Zero(2));
  CHECK(r.degenerate);
  CHECK(r.radius == 0.0);
}

TEST_CASE("calc_rits matches the support-function oracle") {
  std::mt19937_64 rng(777);
  int exercised = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 2;
    const int m = 3 + trial % 4;
    const MomentArmMatrix G = testutil::random_design(rng, m, n);
    const Vec tau = testutil::random_tau(rng, n, 30.0);
    const TensionBounds b = default_bounds(m);
    const double got = calc_rits(G, b, tau).radius;
    const double want = rits_oracle(G, b, tau, 512);
    CHECK(std::abs(got - want) <= 1e-6);
    if (got > 0.0) ++exercised;
  }
  CHECK(exercised > 100);  // the comparison must not be vacuous
}

TEST_CASE("rits agrees with the 1-DOF interval oracle") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 500; ++trial) {
    const int m = 3 + trial % 4;
    const MomentArmMatrix G = testutil::random_design(rng, m, 1);
    const Vec tau = testutil::random_tau(rng, 1, 40.0);
    const double got = calc_rits(G, default_bounds(m), tau).radius;
    const double want = testutil::rits_interval(G, default_bounds(m), tau[0]);
    CHECK(got == doctest::Approx(want).epsilon(1e-9));
  }
}

TEST_CASE("rits scales linearly with the tension box") {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 2;
    const MomentArmMatrix G = testutil::random_design(rng, 4, n);
    const Vec tau = testutil::random_tau(rng, n, 10.0);
    const TensionBounds b = default_bounds(4);
    TensionBounds b2{b.f_min * 3.0, b.f_max * 3.0};
    const double r1 = calc_rits(G, b, tau).radius;
    const double r3 = calc_rits(G, b2, Vec(tau * 3.0)).radius;
    CHECK(r3 == doctest::Approx(3.0 * r1).epsilon(1e-9));
  }
}

TEST_CASE("rupturing a muscle never increases rits") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 2;
    const int m = 3 + trial % 3;
    const MomentArmMatrix G = testutil::random_design(rng, m, n);
    const Vec tau = testutil::random_tau(rng, n, 15.0);
    const TensionBounds b = default_bounds(m);
    const double intact = calc_rits(G, b, tau).radius;
    for (int i = 1; i <= m; ++i) {
      CHECK(calc_rits(rupture(G, i), b, tau).radius <= intact + 1e-9);
    }
  }
}

TEST_CASE("rits is invariant under muscle permutation") {
  std::mt19937_64 rng(909);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 2;
    const int m = 4 + trial % 2;
    const MomentArmMatrix G = testutil::random_design(rng, m, n);
    const Vec tau = testutil::random_tau(rng, n, 15.0);
    const TensionBounds b = default_bounds(m);

    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    MomentArmMatrix P = G;
    for (int i = 0; i < m; ++i) P.entries.row(i) = G.entries.row(perm[i]);

    CHECK(calc_rits(P, b, tau).radius ==
          doctest::Approx(calc_rits(G, b, tau).radius).epsilon(1e-9));
  }
}
