#include <cmath>

#include "doctest.h"
#include "ruptureopt/optimizer.hpp"
#include "ruptureopt/report.hpp"
#include "ruptureopt/scenarios.hpp"

using namespace ruptureopt;

namespace {

DesignProblem scenario(const std::string& id) {
  const DesignProblem* p = find_scenario(id);
  REQUIRE(p != nullptr);
  return *p;
}

bool on_grid(const Vec& genome, const DesignProblem& p) {
  for (int i = 0; i < genome.size(); ++i) {
    if (genome[i] < p.g_min - 1e-12 || genome[i] > p.g_max + 1e-12) return false;
    if (std::abs(genome[i] * 100.0 - std::round(genome[i] * 100.0)) > 1e-9) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("identical seeds give identical runs") {
  GaConfig cfg;
  cfg.population = 60;
  cfg.generations = 12;
  cfg.seed = 42;
  const DesignProblem p = scenario("table1/m4/tg0");

  const GaResult a = optimize(p, cfg);
  const GaResult b = optimize(p, cfg);
  CHECK(a.best.genome == b.best.genome);
  CHECK(a.best.fitness == b.best.fitness);
  REQUIRE(a.history.size() == b.history.size());
  for (size_t g = 0; g < a.history.size(); ++g) {
    CHECK(a.history[g].max_fitness == b.history[g].max_fitness);
    CHECK(a.history[g].mean_fitness == b.history[g].mean_fitness);
  }
}

TEST_CASE("elitism keeps the running maximum monotone") {
  GaConfig cfg;
  cfg.population = 80;
  cfg.generations = 20;
  cfg.seed = 7;
  const DesignProblem p = scenario("table1/m5/tg-5");
  const GaResult res = optimize(p, cfg);
  REQUIRE(res.history.size() == static_cast<size_t>(cfg.generations) + 1);
  for (size_t g = 1; g < res.history.size(); ++g) {
    CHECK(res.history[g].max_fitness >= res.history[g - 1].max_fitness - 1e-12);
    CHECK(res.history[g].mean_fitness <= res.history[g].max_fitness + 1e-12);
  }
  CHECK(res.best.fitness == doctest::Approx(res.history.back().max_fitness));
}

TEST_CASE("best genome respects the bounds and the rounding grid") {
  GaConfig cfg;
  cfg.population = 60;
  cfg.generations = 10;
  cfg.seed = 3;
  for (const char* id : {"table1/m3/tg-5", "table2/m4/mmin3/tg-50"}) {
    const DesignProblem p = scenario(id);
    const GaResult res = optimize(p, cfg);
    CHECK(on_grid(res.best.genome, p));
    CHECK(res.best.genome.size() == p.muscles * p.joints);
  }
}

TEST_CASE("exhaustive search certifies the 1-DOF optima") {
  SUBCASE("4 muscles, loaded") {
    const ExhaustiveResult r = exhaustive_search(scenario("table1/m4/tg-5"), 0.01);
    CHECK(r.e == doctest::Approx(115.0).epsilon(1e-9));
    CHECK(design_fingerprint(genome_to_matrix(r.genome, 4, 1)) == "-1 -1 1 1");
  }
  SUBCASE("4 muscles, no load") {
    const ExhaustiveResult r = exhaustive_search(scenario("table1/m4/tg0"), 0.01);
    CHECK(r.e == doctest::Approx(120.0).epsilon(1e-9));
    CHECK(design_fingerprint(genome_to_matrix(r.genome, 4, 1)) == "-1 -1 1 1");
  }
  SUBCASE("3 muscles cannot survive a rupture at no load") {
    const ExhaustiveResult r = exhaustive_search(scenario("table1/m3/tg0"), 0.01);
    CHECK(r.e == 0.0);
  }
  SUBCASE("coarse grid still finds the no-load optimum") {
    const ExhaustiveResult r = exhaustive_search(scenario("table1/m4/tg0"), 0.1);
    CHECK(r.e == doctest::Approx(120.0).epsilon(1e-9));
  }
}

TEST_CASE("exhaustive search on a 2-DOF cell where no design survives") {
  const ExhaustiveResult r = exhaustive_search(scenario("table2/m4/mmin4/tg00"), 0.05);
  CHECK(r.e == 0.0);
}

TEST_CASE("symmetry reduction does not change the certified optimum") {
  const DesignProblem p = scenario("table1/m3/tg-5");
  const ExhaustiveResult fast = exhaustive_search(p, 0.05, true);
  const ExhaustiveResult slow = exhaustive_search(p, 0.05, false);
  CHECK(fast.e == doctest::Approx(slow.e).epsilon(1e-12));
  CHECK(design_fingerprint(genome_to_matrix(fast.genome, 3, 1)) ==
        design_fingerprint(genome_to_matrix(slow.genome, 3, 1)));
  CHECK(fast.enumerated < slow.enumerated);
}

TEST_CASE("exhaustive search enforces its budget") {
  CHECK_THROWS_AS(exhaustive_search(scenario("table1/m6/tg0"), 0.01, true, 1000),
                  BudgetExceededError);
}

TEST_CASE("the GA reaches the certified optimum on the 1-DOF problems") {
  const DesignProblem p = scenario("table1/m4/tg-5");
  const ExhaustiveResult truth = exhaustive_search(p, 0.01);

  GaConfig cfg;  // full published settings
  int hits = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    cfg.seed = seed;
    const GaResult res = optimize(p, cfg);
    CHECK(res.best.fitness <= truth.e + 1e-9);  // the oracle really is an upper bound
    if (res.best.fitness >= 0.99 * truth.e) ++hits;
  }
  CHECK(hits == 10);
}

TEST_CASE("ga config validation") {
  GaConfig bad;
  bad.population = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = GaConfig{};
  bad.crossover_prob = 1.5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = GaConfig{};
  bad.tournament_size = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
