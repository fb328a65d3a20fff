// Copyright 2026 The oseenlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "oseenlab/harness.hpp"

namespace oseenlab {

namespace {

const std::pair<Experiment, const char*> kNames[] = {
    {Experiment::MMS, "mms"},
    {Experiment::ScalingSteady, "scaling-steady"},
    {Experiment::ScalingTP, "scaling-tp"},
    {Experiment::BilinearEnsemble, "bilinear"},
    {Experiment::PicardSteady, "picard-steady"},
    {Experiment::PicardTP, "picard-tp"},
    {Experiment::LiftingCheck, "lifting-check"},
};

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> t{
      {"mms_linear", 1e-11},   {"mms_nonlinear", 1e-7},  {"slope_max", 0.15},      {"weighted_slope_min", -0.15},
      {"leverage", 0.05},      {"osc_slope", 0.1},       {"plancherel", 1e-10},    {"stability", 0.2},
      {"eta_band", 0.25},      {"lifting_div", 1e-10},   {"lifting_ball", 1e-10},  {"lifting_band", 0.05},
      {"picard_rate", 0.5},    {"certificate", 2.0},     {"uniqueness", 10.0},     {"residual", 1e-8},
  };
  return t;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
    throw std::invalid_argument("config: '" + key + "' expects a number, got '" + v + "'");
  }
  return out;
}

long long to_int(const std::string& key, const std::string& v) {
  long long out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
    throw std::invalid_argument("config: '" + key + "' expects an integer, got '" + v + "'");
  }
  return out;
}

std::vector<double> to_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double(key, trim(item)));
  return out;
}

}  // namespace

std::string to_string(Experiment e) {
  for (const auto& [k, name] : kNames)
    if (k == e) return name;
  return "unknown";
}

Experiment parse_experiment(const std::string& name) {
  for (const auto& [k, n] : kNames)
    if (name == n) return k;
  throw std::invalid_argument("unknown experiment '" + name + "'");
}

double ExperimentConfig::tolerance(const std::string& name) const {
  if (auto it = tolerances.find(name); it != tolerances.end()) return it->second;
  if (auto it = default_tolerances().find(name); it != default_tolerances().end()) return it->second;
  throw std::out_of_range("unknown tolerance '" + name + "'");
}

std::vector<double> ExperimentConfig::lambdas() const {
  if (!lambda_grid.empty()) return lambda_grid;
  if (lambda_points < 1 || !(lambda_min > 0.0)) return {};
  if (lambda_points == 1) return {lambda_min};
  std::vector<double> out(static_cast<std::size_t>(lambda_points));
  const double a = std::log(lambda_min);
  const double b = std::log(lambda0);
  for (int i = 0; i < lambda_points; ++i) out[i] = std::exp(a + (b - a) * i / (lambda_points - 1));
  out.back() = lambda0;
  out.front() = lambda_min;
  return out;
}

void ExperimentConfig::validate() const {
  grid.validate();
  if (!(q > 1.0) || !std::isfinite(q)) throw std::invalid_argument("config: q must lie in (1, inf)");
  if (!(r > 1.0) || !(r < n() + 1.0)) throw std::invalid_argument("config: r must lie in (1, n+1)");
  if (!(lambda0 > 0.0)) throw std::invalid_argument("config: lambda0 must be positive");
  const std::vector<double> ls = lambdas();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (!(ls[i] > 0.0) || ls[i] > lambda0 * (1 + 1e-12)) throw std::invalid_argument("config: lambda values must lie in (0, lambda0]");
    if (i > 0 && !(ls[i] > ls[i - 1])) throw std::invalid_argument("config: lambda_grid must be strictly ascending");
  }
  if (!(period > 0.0)) throw std::invalid_argument("config: period must be positive");
  if (max_mode < 0) throw std::invalid_argument("config: max_mode must be >= 0");
  if (samples < 1) throw std::invalid_argument("config: samples must be >= 1");
  if (field_max_mode < 0 || field_max_mode >= grid.points / 2) throw std::invalid_argument("config: field_max_mode out of range");
  if (refine_points != 0 && (refine_points <= grid.points || refine_points % 2 != 0)) {
    throw std::invalid_argument("config: refine_points must be an even count above points");
  }
  if (!(c_wake >= 0.0)) throw std::invalid_argument("config: c_wake must be >= 0");
  if (!(picard_tol > 0.0) || picard_max_iter < 1) throw std::invalid_argument("config: bad Picard settings");
  if (!(dominance > 0.0)) throw std::invalid_argument("config: dominance must be positive");
  if (!(rho > 0.0)) throw std::invalid_argument("config: rho must be positive");
}

void ExperimentConfig::check_wake() const {
  const std::vector<double> ls = lambdas();
  if (ls.empty()) return;
  const double gate = c_wake / grid.half_period;
  if (ls.front() < gate * (1 - 1e-12)) {
    std::ostringstream msg;
    msg << "wake constraint: lambda = " << ls.front() << " is below c_wake / L = " << gate;
    throw std::invalid_argument(msg.str());
  }
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  bool have_experiment = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string v = trim(line.substr(eq + 1));
    if (key == "experiment") {
      cfg = default_config(parse_experiment(v));
      have_experiment = true;
    } else if (!have_experiment) {
      throw std::invalid_argument("config: 'experiment' must be the first key");
    } else if (key == "dim") {
      cfg.grid.dim = static_cast<int>(to_int(key, v));
    } else if (key == "points") {
      cfg.grid.points = static_cast<int>(to_int(key, v));
    } else if (key == "half_period") {
      cfg.grid.half_period = to_double(key, v);
    } else if (key == "dealias_fraction") {
      cfg.grid.dealias_fraction = to_double(key, v);
    } else if (key == "lambda_grid") {
      cfg.lambda_grid = to_list(key, v);
    } else if (key == "lambda_min") {
      cfg.lambda_min = to_double(key, v);
      cfg.lambda_grid.clear();
    } else if (key == "lambda_points") {
      cfg.lambda_points = static_cast<int>(to_int(key, v));
      cfg.lambda_grid.clear();
    } else if (key == "lambda0") {
      cfg.lambda0 = to_double(key, v);
    } else if (key == "c_wake") {
      cfg.c_wake = to_double(key, v);
    } else if (key == "q") {
      cfg.q = to_double(key, v);
    } else if (key == "r") {
      cfg.r = to_double(key, v);
    } else if (key == "period") {
      cfg.period = to_double(key, v);
    } else if (key == "max_mode") {
      cfg.max_mode = static_cast<int>(to_int(key, v));
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(to_int(key, v));
    } else if (key == "samples") {
      cfg.samples = static_cast<int>(to_int(key, v));
    } else if (key == "field_max_mode") {
      cfg.field_max_mode = static_cast<int>(to_int(key, v));
    } else if (key == "dominance") {
      cfg.dominance = to_double(key, v);
    } else if (key == "refine_points") {
      cfg.refine_points = static_cast<int>(to_int(key, v));
    } else if (key == "bump_width") {
      cfg.bump_width = to_double(key, v);
    } else if (key == "gradient_amplitude") {
      cfg.gradient_amplitude = to_double(key, v);
    } else if (key == "cutoff_inner") {
      cfg.cutoff.inner_radius = to_double(key, v);
    } else if (key == "cutoff_outer") {
      cfg.cutoff.outer_radius = to_double(key, v);
    } else if (key == "cutoff_sharpness") {
      cfg.cutoff.sharpness = to_double(key, v);
    } else if (key == "amplitude") {
      cfg.amplitude = to_double(key, v);
    } else if (key == "rho") {
      cfg.rho = to_double(key, v);
    } else if (key == "gamma") {
      cfg.gamma = to_double(key, v);
    } else if (key == "picard_tol") {
      cfg.picard_tol = to_double(key, v);
    } else if (key == "picard_max_iter") {
      cfg.picard_max_iter = static_cast<int>(to_int(key, v));
    } else if (key == "output") {
      cfg.output = v;
    } else if (key.rfind("tol.", 0) == 0) {
      const std::string name = key.substr(4);
      if (!default_tolerances().contains(name)) throw std::invalid_argument("config: unknown tolerance '" + name + "'");
      cfg.tolerances[name] = to_double(key, v);
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  if (!have_experiment) throw std::invalid_argument("config: missing 'experiment'");
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path.string());
  return parse_config(in);
}

ExperimentConfig default_config(Experiment e) {
  ExperimentConfig c;
  c.experiment = e;
  c.grid.dim = 3;
  c.grid.points = 32;
  c.grid.half_period = 1.0;
  switch (e) {
    case Experiment::MMS:
      c.lambda_grid = {0.5};
      c.period = 2.0;
      c.max_mode = 3;
      c.cutoff.outer_radius = 2.7;
      break;
    case Experiment::ScalingSteady:
      c.grid.points = 64;
      c.grid.half_period = 8.0;
      c.lambda0 = 5.0;
      c.lambda_min = 0.5;
      c.lambda_points = 6;
      break;
    case Experiment::ScalingTP:
      c.grid.points = 64;
      c.grid.half_period = 8.0;
      c.lambda0 = 5.0;
      c.lambda_min = 0.5;
      c.lambda_points = 6;
      c.q = 2.0;
      c.r = 1.6;
      c.period = 0.25;  // keeps lambda xi_1 = -omega outside the forcing band
      c.max_mode = 1;
      break;
    case Experiment::BilinearEnsemble:
      c.grid.points = 24;
      c.grid.half_period = 4.0;
      c.lambda_min = 0.0;
      c.lambda_points = 6;
      c.period = 2.0;
      c.max_mode = 1;
      c.samples = 100;
      c.refine_points = 32;
      break;
    case Experiment::PicardSteady:
    case Experiment::PicardTP:
      c.grid.half_period = 4.0;
      c.lambda_grid = {1e-6, 1e-4, 1e-2, 1.0};
      c.period = 2.0;
      c.max_mode = 1;
      c.samples = 8;
      c.cutoff.outer_radius = 10.0;
      break;
    case Experiment::LiftingCheck:
      c.grid.dim = 2;
      c.grid.points = 256;
      c.lambda0 = 0.1;
      c.lambda_min = 1e-3;
      c.lambda_points = 5;
      c.q = 2.0;
      c.r = 1.5;
      break;
  }
  return c;
}

}  // namespace oseenlab
