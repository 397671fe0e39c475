#pragma once

#include <cstdint>

#include "ruptureopt/problem.hpp"

namespace ruptureopt {

struct GaConfig {
  int population = 200;
  int generations = 50;
  double crossover_prob = 0.5;
  double mutation_prob = 0.2;
  int tournament_size = 3;
  double blend_alpha = 0.5;
  double mut_sigma = 0.02;  // meters
  double mut_indpb = 0.2;
  int round_decimals = 2;
  std::uint64_t seed = 0;

  void validate() const;
};

struct Individual {
  Vec genome;
  double fitness = 0.0;
  bool fresh = false;
};

struct GenerationStats {
  int generation = 0;
  double max_fitness = 0.0;
  double mean_fitness = 0.0;
};

struct GaResult {
  Individual best;
  std::vector<GenerationStats> history;
};

/// Generational GA over moment-arm genomes: tournament selection, blend
/// crossover on adjacent pairs, per-gene Gaussian mutation, clamp to
/// [g_min, g_max] and round to round_decimals after every variation.
/// Elitism of 1; identical seeds give identical histories.
GaResult optimize(const DesignProblem& problem, const GaConfig& cfg);

struct ExhaustiveResult {
  Vec genome;
  double e = 0.0;
  std::uint64_t enumerated = 0;
};

struct BudgetExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Certifying oracle: enumerate every genome on the grid
/// [g_min : grid_step : g_max] and return the maximizer, ties broken toward
/// the lexicographically smallest genome. With symmetry_reduction only
/// sorted-muscle-row representatives are visited (E is invariant under
/// muscle permutation).
ExhaustiveResult exhaustive_search(const DesignProblem& problem, double grid_step,
                                   bool symmetry_reduction = true,
                                   std::uint64_t budget = 100'000'000);

}  // namespace ruptureopt
