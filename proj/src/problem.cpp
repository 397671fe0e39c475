#include "ruptureopt/problem.hpp"

namespace ruptureopt {

void DesignProblem::validate() const {
  if (joints < 1 || joints > 3) throw DimensionLimitError("joint count must be 1..3");
  if (muscles < 1 || muscles > 20) throw DimensionLimitError("muscle count must be 1..20");
  if (m_min < 0 || m_min > muscles) throw std::invalid_argument("m_min out of range");
  if (tau_g.size() != joints) throw std::invalid_argument("tau_g length mismatch");
  if (!(g_min < g_max)) throw std::invalid_argument("g_min must be below g_max");
  ruptureopt::validate(bounds, muscles);
}

TensionBounds default_bounds(int muscles) {
  return {Vec::Zero(muscles), Vec::Constant(muscles, 200.0)};
}

MomentArmMatrix genome_to_matrix(const Vec& genome, int muscles, int joints) {
  if (genome.size() != muscles * joints) {
    throw std::invalid_argument("genome length does not match problem size");
  }
  MomentArmMatrix G;
  G.entries = Mat(muscles, joints);
  for (int i = 0; i < muscles; ++i) {
    for (int j = 0; j < joints; ++j) {
      G.entries(i, j) = genome[i * joints + j];
    }
  }
  return G;
}

Vec matrix_to_genome(const MomentArmMatrix& G) {
  Vec genome(G.muscles() * G.joints());
  for (int i = 0; i < G.muscles(); ++i) {
    for (int j = 0; j < G.joints(); ++j) {
      genome[i * G.joints() + j] = G.entries(i, j);
    }
  }
  return genome;
}

}  // namespace ruptureopt
