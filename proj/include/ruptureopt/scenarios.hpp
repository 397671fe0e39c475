#pragma once

#include "ruptureopt/problem.hpp"

namespace ruptureopt {

/// A published design with its evaluation context. Matrices are stored in
/// meters; the tables print 10 G^T.
struct NamedDesign {
  std::string label;
  MomentArmMatrix G;
  std::string source;
  DesignProblem problem;
};

/// The 1-DOF grid (M in 3..6 x tau_g in {0, -5}) and the 2-DOF grid
/// (M in {4,5} x tau_g in {(0,0), (-5,0)} x m_min in {M, M-1}).
const std::vector<DesignProblem>& builtin_scenarios();

/// Published optima and hand-made designs: the Table I and Table II cells,
/// the A / A' comparison, and the three Musashi elbow Jacobians.
const std::vector<NamedDesign>& builtin_designs();

const DesignProblem* find_scenario(const std::string& id);
const NamedDesign* find_design(const std::string& id);

}  // namespace ruptureopt
