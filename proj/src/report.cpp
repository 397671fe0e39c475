#include "ruptureopt/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace ruptureopt {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string format_rows(const Mat& gt10) {
  std::ostringstream os;
  for (Eigen::Index j = 0; j < gt10.rows(); ++j) {
    if (j) os << ";";
    for (Eigen::Index i = 0; i < gt10.cols(); ++i) {
      if (i) os << " ";
      os << fmt(gt10(j, i));
    }
  }
  return os.str();
}

}  // namespace

std::string format_design(const MomentArmMatrix& G) {
  return format_rows(10.0 * G.entries.transpose());
}

MomentArmMatrix parse_design(const std::string& text) {
  std::vector<std::vector<double>> rows;
  for (const auto& row_text : split(text, ';')) {
    std::vector<double> row;
    std::istringstream is(row_text);
    double v;
    while (is >> v) row.push_back(v);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("empty design text");
  const size_t m = rows[0].size();
  MomentArmMatrix G;
  G.entries = Mat(m, rows.size());
  for (size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].size() != m) throw std::invalid_argument("ragged design text");
    for (size_t i = 0; i < m; ++i) G.entries(i, j) = rows[j][i] / 10.0;
  }
  return G;
}

std::string design_fingerprint(const MomentArmMatrix& G) {
  std::vector<Vec> muscle_rows;
  for (int i = 0; i < G.muscles(); ++i) {
    muscle_rows.push_back(G.entries.row(i).transpose());
  }
  std::sort(muscle_rows.begin(), muscle_rows.end(), [](const Vec& a, const Vec& b) {
    for (Eigen::Index k = 0; k < a.size(); ++k) {
      if (a[k] != b[k]) return a[k] < b[k];
    }
    return false;
  });
  MomentArmMatrix sorted = G;
  for (int i = 0; i < G.muscles(); ++i) {
    sorted.entries.row(i) = muscle_rows[i].transpose();
  }
  return format_design(sorted);
}

ReportRow make_report_row(const std::string& scenario, const MomentArmMatrix& G,
                          const RobustnessEval& eval) {
  ReportRow row;
  row.scenario = scenario;
  row.design = format_design(G);
  row.m_min = eval.m_min;
  row.e_value = eval.e_value;
  row.e_count = eval.e_count;
  row.e = eval.e;
  row.radii.assign(eval.r.data(), eval.r.data() + eval.r.size());
  return row;
}

std::string emit_csv(const std::vector<ReportRow>& rows) {
  size_t max_radii = 0;
  for (const auto& r : rows) max_radii = std::max(max_radii, r.radii.size());

  std::ostringstream os;
  os << "scenario,design,m_min,e_value,e_count,e";
  for (size_t i = 0; i < max_radii; ++i) os << ",r" << i;
  os << "\n";
  for (const auto& r : rows) {
    os << r.scenario << "," << r.design << "," << r.m_min << "," << fmt(r.e_value)
       << "," << r.e_count << "," << fmt(r.e);
    for (double radius : r.radii) os << "," << fmt(radius);
    os << "\n";
  }
  return os.str();
}

std::vector<ReportRow> parse_csv(const std::string& text) {
  std::vector<ReportRow> rows;
  std::istringstream is(text);
  std::string line;
  bool header = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() < 6) throw std::invalid_argument("short CSV row");
    ReportRow row;
    row.scenario = fields[0];
    row.design = fields[1];
    row.m_min = std::stoi(fields[2]);
    row.e_value = std::stod(fields[3]);
    row.e_count = std::stoi(fields[4]);
    row.e = std::stod(fields[5]);
    for (size_t i = 6; i < fields.size(); ++i) {
      if (!fields[i].empty()) row.radii.push_back(std::stod(fields[i]));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace ruptureopt
