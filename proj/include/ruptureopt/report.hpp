#pragma once

#include <string>
#include <vector>

#include "ruptureopt/evaluation.hpp"
#include "ruptureopt/torque_space.hpp"

namespace ruptureopt {

/// One CSV row of an evaluation report. The design is printed as 10 G^T with
/// two decimals, the form the tables use; it round-trips to the stored G.
struct ReportRow {
  std::string scenario;
  std::string design;  // semicolon-separated rows of 10 G^T
  int m_min = 0;
  double e_value = 0.0;
  int e_count = 0;
  double e = 0.0;
  std::vector<double> radii;  // r_0 .. r_M
};

std::string format_design(const MomentArmMatrix& G);
MomentArmMatrix parse_design(const std::string& text);

/// Muscle-permutation equivalence-class fingerprint: rows of 10 G^T with the
/// muscle columns sorted lexicographically.
std::string design_fingerprint(const MomentArmMatrix& G);

ReportRow make_report_row(const std::string& scenario, const MomentArmMatrix& G,
                          const RobustnessEval& eval);

std::string emit_csv(const std::vector<ReportRow>& rows);
std::vector<ReportRow> parse_csv(const std::string& text);

}  // namespace ruptureopt
