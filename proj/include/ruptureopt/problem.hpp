#pragma once

#include <string>

#include "ruptureopt/evaluation.hpp"

namespace ruptureopt {

/// Problem constants for one design-optimization instance.
struct DesignProblem {
  std::string id;
  int joints = 1;
  int muscles = 4;
  int m_min = 4;
  Vec tau_g;
  TensionBounds bounds;
  double g_min = -0.1;  // meters
  double g_max = 0.1;

  void validate() const;
};

/// Default tension box of the experiments: f in [0, 200] N per muscle.
TensionBounds default_bounds(int muscles);

/// Reshape a flat row-major genome (muscle-major) into a moment-arm matrix.
MomentArmMatrix genome_to_matrix(const Vec& genome, int muscles, int joints);
Vec matrix_to_genome(const MomentArmMatrix& G);

}  // namespace ruptureopt
