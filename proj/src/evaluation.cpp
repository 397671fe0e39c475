#include "ruptureopt/evaluation.hpp"

namespace ruptureopt {

RobustnessEval evaluate(const MomentArmMatrix& G, const TensionBounds& bounds,
                        const Vec& tau_g, int m_min) {
  const int m = G.muscles();
  if (m_min < 0 || m_min > m) {
    throw std::invalid_argument("m_min must lie in [0, muscle count]");
  }

  RobustnessEval eval;
  eval.m_min = m_min;
  eval.r = Vec::Zero(m + 1);
  eval.r[0] = calc_rits(G, bounds, tau_g).radius;
  for (int i = 1; i <= m; ++i) {
    eval.r[i] = calc_rits(rupture(G, i), bounds, tau_g).radius;
  }
  for (int i = 0; i <= m; ++i) {
    eval.e_value += eval.r[i];
    if (eval.r[i] > kPositiveRadiusTol) ++eval.e_count;
  }
  eval.e = eval.e_count >= m_min + 1 ? eval.e_value : 0.0;
  return eval;
}

}  // namespace ruptureopt
