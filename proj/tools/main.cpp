#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "ruptureopt/config.hpp"
#include "ruptureopt/report.hpp"
#include "ruptureopt/svg.hpp"

namespace {

namespace fs = std::filesystem;
using namespace ruptureopt;

std::string sanitize(const std::string& id) {
  std::string out = id;
  for (char& c : out) {
    if (c == '/' || c == '\\') c = '_';
  }
  return out;
}

void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

int thread_cap() {
  if (const char* env = std::getenv("RUPTUREOPT_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

template <typename Fn>
void parallel_for(int count, Fn&& fn) {
  const int workers = std::min(thread_cap(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

struct CommonOpts {
  std::string config_path;
  std::string out_dir;
  std::vector<std::string> scenarios;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int rupture_index = 0;
  bool no_svg = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "JSON config file");
  cmd->add_option("--out", opts.out_dir, "output directory");
  cmd->add_option("--scenario", opts.scenarios, "scenario or design id");
  cmd->add_option("--seed", opts.seed, "RNG seed")->each([&](const std::string&) {
    opts.seed_set = true;
  });
  cmd->add_option("--rupture", opts.rupture_index, "1-based muscle to rupture");
  cmd->add_flag("--no-svg", opts.no_svg, "suppress SVG output");
}

RunConfig resolve_config(const CommonOpts& opts) {
  RunConfig cfg;
  if (!opts.config_path.empty()) {
    cfg = load_config(opts.config_path);
  } else {
    cfg.problem.tau_g = Vec::Zero(1);
    cfg.problem.bounds = default_bounds(cfg.problem.muscles);
  }
  if (!opts.scenarios.empty()) {
    const std::string& id = opts.scenarios.front();
    if (const NamedDesign* d = find_design(id)) {
      cfg.problem = d->problem;
      cfg.design = d->G;
    } else if (const DesignProblem* p = find_scenario(id)) {
      cfg.problem = *p;
      cfg.design.reset();
    } else {
      throw ConfigError("unknown scenario id: " + id);
    }
  }
  if (!opts.out_dir.empty()) cfg.output_dir = opts.out_dir;
  if (opts.seed_set) cfg.ga.seed = opts.seed;
  if (opts.no_svg) cfg.emit_svg = false;
  return cfg;
}

void emit_panels(const RunConfig& cfg, const MomentArmMatrix& G,
                 const std::string& tag) {
  if (!cfg.emit_svg || cfg.problem.joints != 2) return;
  const ConvexPolytope intact = build_torque_polytope(G, cfg.problem.bounds);
  PanelStyle style;
  style.half_extent_nm = fit_half_extent(intact, cfg.problem.tau_g);
  for (int i = 0; i <= G.muscles(); ++i) {
    const MomentArmMatrix state = i == 0 ? G : rupture(G, i);
    const RitsResult rits = calc_rits(state, cfg.problem.bounds, cfg.problem.tau_g);
    const ConvexPolytope poly = build_torque_polytope(state, cfg.problem.bounds);
    const std::string svg =
        render_torque_panel(poly, cfg.problem.tau_g, rits, style);
    write_file(fs::path(cfg.output_dir) /
                   (tag + "_rupt" + std::to_string(i) + ".svg"),
               svg);
  }
}

int cmd_rits(const CommonOpts& opts) {
  const RunConfig cfg = resolve_config(opts);
  if (!cfg.design) throw ConfigError("rits needs a design (scenario id or config design)");
  MomentArmMatrix G = *cfg.design;
  if (opts.rupture_index > 0) G = rupture(G, opts.rupture_index);

  const RitsResult res = calc_rits(G, cfg.problem.bounds, cfg.problem.tau_g);
  std::cout << "scenario=" << cfg.problem.id << " rupture=" << opts.rupture_index
            << " radius=" << res.radius << " included=" << (res.included ? 1 : 0)
            << " degenerate=" << (res.degenerate ? 1 : 0);
  if (res.limiting_facet) std::cout << " limiting_facet=" << *res.limiting_facet;
  std::cout << "\n";

  if (cfg.emit_svg && cfg.problem.joints == 2) {
    const ConvexPolytope poly = build_torque_polytope(G, cfg.problem.bounds);
    PanelStyle style;
    style.half_extent_nm = fit_half_extent(poly, cfg.problem.tau_g);
    const std::string name = sanitize(cfg.problem.id) + "_rupt" +
                             std::to_string(opts.rupture_index) + "_rits.svg";
    write_file(fs::path(cfg.output_dir) / name,
               render_torque_panel(poly, cfg.problem.tau_g, res, style));
  }
  return 0;
}

int cmd_eval(const CommonOpts& opts) {
  RunConfig base;
  if (!opts.config_path.empty()) base = load_config(opts.config_path);
  if (!opts.out_dir.empty()) base.output_dir = opts.out_dir;
  if (opts.no_svg) base.emit_svg = false;

  std::vector<ReportRow> rows;
  for (const std::string& id : opts.scenarios) {
    const NamedDesign* design = find_design(id);
    if (!design) throw ConfigError("unknown design id: " + id);
    RunConfig cfg = base;
    cfg.problem = design->problem;
    const RobustnessEval eval =
        evaluate(design->G, cfg.problem.bounds, cfg.problem.tau_g, cfg.problem.m_min);
    rows.push_back(make_report_row(design->label, design->G, eval));
    emit_panels(cfg, design->G, sanitize(design->label));
  }
  // scenario-less config runs evaluate the config design
  if (opts.scenarios.empty() && base.design) {
    const RobustnessEval eval = evaluate(*base.design, base.problem.bounds,
                                         base.problem.tau_g, base.problem.m_min);
    rows.push_back(make_report_row(base.problem.id, *base.design, eval));
    emit_panels(base, *base.design, sanitize(base.problem.id));
  }

  const std::string csv = emit_csv(rows);
  if (base.emit_csv) write_file(fs::path(base.output_dir) / "eval.csv", csv);
  std::cout << csv;
  return 0;
}

int cmd_optimize(const CommonOpts& opts) {
  const RunConfig cfg = resolve_config(opts);
  const auto start = std::chrono::steady_clock::now();
  const GaResult result = optimize(cfg.problem, cfg.ga);
  const double wall_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();

  const MomentArmMatrix best =
      genome_to_matrix(result.best.genome, cfg.problem.muscles, cfg.problem.joints);
  const RobustnessEval eval =
      evaluate(best, cfg.problem.bounds, cfg.problem.tau_g, cfg.problem.m_min);
  const bool no_solution = eval.no_solution();

  const std::string tag = "optimize_" + sanitize(cfg.problem.id);
  std::ostringstream history;
  history << "generation,max,mean\n";
  for (const auto& s : result.history) {
    char line[96];
    std::snprintf(line, sizeof(line), "%d,%.6g,%.6g\n", s.generation, s.max_fitness,
                  s.mean_fitness);
    history << line;
  }
  write_file(fs::path(cfg.output_dir) / (tag + "_history.csv"), history.str());
  write_file(fs::path(cfg.output_dir) / (tag + "_result.csv"),
             emit_csv({make_report_row(cfg.problem.id, best, eval)}));
  std::ostringstream summary;
  summary << "scenario=" << cfg.problem.id << "\n"
          << "design=" << format_design(best) << "\n"
          << "fingerprint=" << design_fingerprint(best) << "\n"
          << "e=" << eval.e << "\n"
          << "no_solution=" << (no_solution ? 1 : 0) << "\n";
  write_file(fs::path(cfg.output_dir) / (tag + "_best.txt"), summary.str());

  std::cout << summary.str() << "wall_ms=" << wall_ms << "\n";
  if (no_solution) std::cout << "no solution\n";
  return 0;
}

int cmd_sweep(const std::string& grid, const CommonOpts& opts) {
  if (grid != "table1" && grid != "table2") {
    throw ConfigError("grid id must be table1 or table2");
  }
  RunConfig base;
  if (!opts.config_path.empty()) base = load_config(opts.config_path);
  if (!opts.out_dir.empty()) base.output_dir = opts.out_dir;
  if (opts.seed_set) base.ga.seed = opts.seed;

  std::vector<DesignProblem> cells;
  for (const auto& s : builtin_scenarios()) {
    if (s.id.rfind(grid + "/", 0) == 0) cells.push_back(s);
  }

  struct CellResult {
    std::string ga_fp, exh_fp;
    double ga_e = 0.0, exh_e = -1.0;
    bool no_solution = true, certified = false;
  };
  std::vector<CellResult> results(cells.size());

  parallel_for(static_cast<int>(cells.size()), [&](int i) {
    const DesignProblem& cell = cells[i];
    GaConfig ga = base.ga;
    ga.seed = base.ga.seed * 1000 + static_cast<std::uint64_t>(i);
    const GaResult run = optimize(cell, ga);
    const MomentArmMatrix best =
        genome_to_matrix(run.best.genome, cell.muscles, cell.joints);
    CellResult& r = results[i];
    r.ga_e = run.best.fitness;
    r.ga_fp = design_fingerprint(best);
    r.no_solution = run.best.fitness <= 0.0;

    const double step = cell.joints == 1 && cell.muscles <= 4 ? 0.01 : 0.05;
    try {
      const ExhaustiveResult exh = exhaustive_search(cell, step, true, 1'000'000);
      r.exh_e = exh.e;
      r.exh_fp = design_fingerprint(
          genome_to_matrix(exh.genome, cell.muscles, cell.joints));
      r.certified = true;
    } catch (const BudgetExceededError&) {
      // grid too fine for this cell; GA result stands uncertified
    }
  });

  std::ostringstream csv;
  csv << "scenario,ga_e,no_solution,ga_fingerprint,exh_e,exh_fingerprint\n";
  for (size_t i = 0; i < cells.size(); ++i) {
    const CellResult& r = results[i];
    char nums[40];
    std::snprintf(nums, sizeof(nums), "%.6g", r.ga_e);
    csv << cells[i].id << "," << nums << "," << (r.no_solution ? 1 : 0) << ","
        << r.ga_fp << ",";
    if (r.certified) {
      std::snprintf(nums, sizeof(nums), "%.6g", r.exh_e);
      csv << nums << "," << r.exh_fp;
    } else {
      csv << ",";
    }
    csv << "\n";
  }
  write_file(fs::path(base.output_dir) / ("sweep_" + grid + ".csv"), csv.str());
  std::cout << csv.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"moment-arm robustness analysis and optimization for tendon-driven joints"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string grid;
  CLI::App* rits_cmd = app.add_subcommand("rits", "inscribed-radius of one design");
  CLI::App* eval_cmd = app.add_subcommand("eval", "rupture-robustness evaluation");
  CLI::App* opt_cmd = app.add_subcommand("optimize", "GA design optimization");
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "reproduce a result-table grid");
  for (CLI::App* cmd : {rits_cmd, eval_cmd, opt_cmd, sweep_cmd}) add_common(cmd, opts);
  sweep_cmd->add_option("grid", grid, "table1 or table2")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (rits_cmd->parsed()) return cmd_rits(opts);
    if (eval_cmd->parsed()) return cmd_eval(opts);
    if (opt_cmd->parsed()) return cmd_optimize(opts);
    if (sweep_cmd->parsed()) return cmd_sweep(grid, opts);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionLimitError& e) {
    std::cerr << "dimension limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
