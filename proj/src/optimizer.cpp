#include "ruptureopt/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace ruptureopt {

namespace {

double round_to(double x, int decimals) {
  const double f = std::pow(10.0, decimals);
  const double r = std::round(x * f) / f;
  return r == 0.0 ? 0.0 : r;  // normalize -0.0
}

void repair(Vec& genome, const DesignProblem& problem, int decimals) {
  for (Eigen::Index i = 0; i < genome.size(); ++i) {
    genome[i] = round_to(std::clamp(genome[i], problem.g_min, problem.g_max), decimals);
  }
}

double fitness_of(const Vec& genome, const DesignProblem& problem) {
  const MomentArmMatrix G = genome_to_matrix(genome, problem.muscles, problem.joints);
  return evaluate(G, problem.bounds, problem.tau_g, problem.m_min).e;
}

GenerationStats stats_of(int generation, const std::vector<Individual>& pop) {
  GenerationStats s;
  s.generation = generation;
  s.max_fitness = pop[0].fitness;
  double sum = 0.0;
  for (const auto& ind : pop) {
    s.max_fitness = std::max(s.max_fitness, ind.fitness);
    sum += ind.fitness;
  }
  s.mean_fitness = sum / static_cast<double>(pop.size());
  return s;
}

}  // namespace

void GaConfig::validate() const {
  auto prob_ok = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!prob_ok(crossover_prob) || !prob_ok(mutation_prob) || !prob_ok(mut_indpb)) {
    throw std::invalid_argument("probabilities must lie in [0, 1]");
  }
  if (tournament_size < 1 || population < tournament_size) {
    throw std::invalid_argument("population must be >= tournament size >= 1");
  }
  if (generations < 0) throw std::invalid_argument("negative generation count");
  if (round_decimals < 0) throw std::invalid_argument("negative rounding precision");
  if (mut_sigma < 0) throw std::invalid_argument("negative mutation sigma");
}

GaResult optimize(const DesignProblem& problem, const GaConfig& cfg) {
  problem.validate();
  cfg.validate();

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> gene_dist(problem.g_min, problem.g_max);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, cfg.mut_sigma);
  const int genes = problem.muscles * problem.joints;

  std::vector<Individual> pop(cfg.population);
  for (auto& ind : pop) {
    ind.genome = Vec::NullaryExpr(genes, [&](Eigen::Index) { return gene_dist(rng); });
    repair(ind.genome, problem, cfg.round_decimals);
    ind.fitness = fitness_of(ind.genome, problem);
    ind.fresh = true;
  }

  GaResult result;
  result.history.push_back(stats_of(0, pop));

  auto better = [](const Individual& a, const Individual& b) {
    return a.fitness > b.fitness;
  };

  for (int gen = 1; gen <= cfg.generations; ++gen) {
    const Individual elite = *std::min_element(
        pop.begin(), pop.end(), [&](const auto& a, const auto& b) { return better(a, b); });

    // tournament selection, size cfg.tournament_size
    std::vector<Individual> offspring;
    offspring.reserve(cfg.population);
    std::uniform_int_distribution<int> pick(0, cfg.population - 1);
    for (int i = 0; i < cfg.population; ++i) {
      int best = pick(rng);
      for (int t = 1; t < cfg.tournament_size; ++t) {
        const int c = pick(rng);
        if (pop[c].fitness > pop[best].fitness) best = c;
      }
      offspring.push_back(pop[best]);
    }

    // blend crossover on adjacent pairs
    for (int i = 0; i + 1 < cfg.population; i += 2) {
      if (unit(rng) >= cfg.crossover_prob) continue;
      Vec& a = offspring[i].genome;
      Vec& b = offspring[i + 1].genome;
      for (int g = 0; g < genes; ++g) {
        const double gamma = (1.0 + 2.0 * cfg.blend_alpha) * unit(rng) - cfg.blend_alpha;
        const double x = a[g], y = b[g];
        a[g] = (1.0 - gamma) * x + gamma * y;
        b[g] = gamma * x + (1.0 - gamma) * y;
      }
      offspring[i].fresh = offspring[i + 1].fresh = false;
    }

    // Gaussian mutation
    for (auto& ind : offspring) {
      if (unit(rng) >= cfg.mutation_prob) continue;
      for (int g = 0; g < genes; ++g) {
        if (unit(rng) < cfg.mut_indpb) {
          ind.genome[g] += gauss(rng);
          ind.fresh = false;
        }
      }
    }

    for (auto& ind : offspring) {
      if (ind.fresh) continue;
      repair(ind.genome, problem, cfg.round_decimals);
      ind.fitness = fitness_of(ind.genome, problem);
      ind.fresh = true;
    }

    // elitism of 1: the previous best survives every generation
    auto worst = std::max_element(offspring.begin(), offspring.end(),
                                  [&](const auto& a, const auto& b) { return better(a, b); });
    if (elite.fitness > worst->fitness) *worst = elite;

    pop = std::move(offspring);
    result.history.push_back(stats_of(gen, pop));
  }

  result.best = *std::min_element(
      pop.begin(), pop.end(), [&](const auto& a, const auto& b) { return better(a, b); });
  return result;
}

ExhaustiveResult exhaustive_search(const DesignProblem& problem, double grid_step,
                                   bool symmetry_reduction, std::uint64_t budget) {
  problem.validate();
  if (grid_step <= 0) throw std::invalid_argument("grid step must be positive");

  const int n_values =
      static_cast<int>(std::llround((problem.g_max - problem.g_min) / grid_step)) + 1;
  std::vector<double> values(n_values);
  for (int k = 0; k < n_values; ++k) {
    values[k] = round_to(problem.g_min + k * grid_step, 10);
  }

  const int m = problem.muscles;
  const int n = problem.joints;
  const std::uint64_t row_types = static_cast<std::uint64_t>(std::pow(n_values, n));

  double count = 1.0;
  if (symmetry_reduction) {
    // combinations with repetition: C(row_types + m - 1, m)
    for (int i = 0; i < m; ++i) {
      count *= static_cast<double>(row_types + i) / (i + 1);
    }
  } else {
    count = std::pow(static_cast<double>(row_types), m);
  }
  if (count > static_cast<double>(budget)) {
    throw BudgetExceededError("exhaustive enumeration would visit " +
                              std::to_string(static_cast<std::uint64_t>(count)) +
                              " genomes");
  }

  auto row_values = [&](std::uint64_t row_index, Vec& genome, int muscle) {
    for (int j = n - 1; j >= 0; --j) {
      genome[muscle * n + j] = values[row_index % n_values];
      row_index /= n_values;
    }
  };

  ExhaustiveResult best;
  best.e = -1.0;
  Vec genome(m * n);
  std::vector<std::uint64_t> row(m, 0);

  // odometer over muscle-row indices, non-decreasing when reducing symmetry;
  // lexicographic visiting order makes the first maximizer the tie-break winner
  bool done = false;
  while (!done) {
    for (int i = 0; i < m; ++i) row_values(row[i], genome, i);
    const double e = fitness_of(genome, problem);
    ++best.enumerated;
    if (e > best.e) {
      best.e = e;
      best.genome = genome;
    }
    int pos = m - 1;
    while (pos >= 0) {
      if (++row[pos] < row_types) break;
      --pos;
    }
    if (pos < 0) {
      done = true;
    } else {
      const std::uint64_t floor_index = symmetry_reduction ? row[pos] : 0;
      for (int i = pos + 1; i < m; ++i) row[i] = floor_index;
      if (symmetry_reduction && floor_index >= row_types) done = true;
    }
  }
  return best;
}

}  // namespace ruptureopt
