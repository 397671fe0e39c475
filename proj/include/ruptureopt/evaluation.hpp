#pragma once

#include "ruptureopt/rits.hpp"

namespace ruptureopt {

// radii below this count as zero when testing "can still move"
inline constexpr double kPositiveRadiusTol = 1e-9;

/// Rupture-robustness score of a design: RITS of the intact matrix and of
/// every single-muscle rupture, gated by the required survivable count.
struct RobustnessEval {
  Vec r;          // M+1 radii, index 0 = intact, i = muscle i ruptured
  double e_value = 0.0;
  int e_count = 0;
  double e = 0.0;
  int m_min = 0;

  bool no_solution() const { return e <= 0.0; }
};

RobustnessEval evaluate(const MomentArmMatrix& G, const TensionBounds& bounds,
                        const Vec& tau_g, int m_min);

}  // namespace ruptureopt
