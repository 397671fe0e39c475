#include "ruptureopt/config.hpp"

#include <fstream>

#include "json.hpp"
#include "ruptureopt/report.hpp"

namespace ruptureopt {

namespace {

using nlohmann::json;

Vec to_vec(const json& arr) {
  Vec v(arr.size());
  for (size_t i = 0; i < arr.size(); ++i) v[i] = arr[i].get<double>();
  return v;
}

void parse_problem(const json& j, RunConfig& cfg) {
  if (j.contains("scenario")) {
    const std::string id = j["scenario"].get<std::string>();
    if (const NamedDesign* d = find_design(id)) {
      cfg.problem = d->problem;
      cfg.design = d->G;
    } else if (const DesignProblem* p = find_scenario(id)) {
      cfg.problem = *p;
    } else {
      throw ConfigError("unknown scenario id: " + id);
    }
    return;
  }
  DesignProblem p;
  p.id = j.value("id", std::string("custom"));
  p.joints = j.value("joints", 1);
  p.muscles = j.value("muscles", 4);
  p.m_min = j.value("m_min", p.muscles);
  p.tau_g = j.contains("tau_g") ? to_vec(j["tau_g"]) : Vec::Zero(p.joints);
  p.bounds = default_bounds(p.muscles);
  if (j.contains("f_min")) p.bounds.f_min = Vec::Constant(p.muscles, j["f_min"].get<double>());
  if (j.contains("f_max")) p.bounds.f_max = Vec::Constant(p.muscles, j["f_max"].get<double>());
  p.g_min = j.value("g_min", -0.1);
  p.g_max = j.value("g_max", 0.1);
  cfg.problem = p;
}

void parse_design(const json& j, RunConfig& cfg) {
  if (j.contains("gt10")) {
    // rows of 10 G^T, matching the printed tables
    Mat gt10(j["gt10"].size(), j["gt10"][0].size());
    for (size_t r = 0; r < j["gt10"].size(); ++r) {
      for (size_t c = 0; c < j["gt10"][r].size(); ++c) {
        gt10(r, c) = j["gt10"][r][c].get<double>();
      }
    }
    MomentArmMatrix G;
    G.entries = gt10.transpose() / 10.0;
    cfg.design = G;
  } else if (j.contains("text")) {
    cfg.design = ruptureopt::parse_design(j["text"].get<std::string>());
  } else {
    throw ConfigError("design needs a gt10 matrix or text form");
  }
}

void parse_ga(const json& j, GaConfig& ga) {
  ga.population = j.value("population", ga.population);
  ga.generations = j.value("generations", ga.generations);
  ga.crossover_prob = j.value("crossover_prob", ga.crossover_prob);
  ga.mutation_prob = j.value("mutation_prob", ga.mutation_prob);
  ga.tournament_size = j.value("tournament_size", ga.tournament_size);
  ga.blend_alpha = j.value("blend_alpha", ga.blend_alpha);
  ga.mut_sigma = j.value("mut_sigma", ga.mut_sigma);
  ga.mut_indpb = j.value("mut_indpb", ga.mut_indpb);
  ga.round_decimals = j.value("round_decimals", ga.round_decimals);
  ga.seed = j.value("seed", ga.seed);
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  RunConfig cfg;
  cfg.problem.tau_g = Vec::Zero(1);
  cfg.problem.bounds = default_bounds(cfg.problem.muscles);
  try {
    if (j.contains("problem")) parse_problem(j["problem"], cfg);
    if (j.contains("design")) parse_design(j["design"], cfg);
    if (j.contains("ga")) parse_ga(j["ga"], cfg.ga);
    if (j.contains("output")) {
      const json& out = j["output"];
      cfg.output_dir = out.value("dir", cfg.output_dir);
      cfg.emit_svg = out.value("svg", cfg.emit_svg);
      cfg.emit_csv = out.value("csv", cfg.emit_csv);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config structure error: ") + e.what());
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_config(text);
}

}  // namespace ruptureopt
