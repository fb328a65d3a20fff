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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oseenlab/field.hpp"
#include "oseenlab/lifting.hpp"

namespace oseenlab {

enum class Experiment { MMS, ScalingSteady, ScalingTP, BilinearEnsemble, PicardSteady, PicardTP, LiftingCheck };

/// CLI / config spelling: "mms", "scaling-steady", "scaling-tp", "bilinear",
/// "picard-steady", "picard-tp", "lifting-check".
std::string to_string(Experiment e);
Experiment parse_experiment(const std::string& name);

/// One experiment, read from a key = value file (see docs/config.md).
struct ExperimentConfig {
  Experiment experiment = Experiment::MMS;
  GridSpec grid;
  /// Sorted ascending. Empty means: lambda_points log-spaced values over
  /// [lambda_min, lambda0].
  std::vector<double> lambda_grid;
  double lambda_min = 0.0;
  int lambda_points = 5;
  double lambda0 = 1.0;
  double c_wake = 4.0;
  double q = 4.0;
  double r = 2.0;
  double period = 1.0;
  int max_mode = 1;
  std::uint64_t seed = 1;
  /// Ensemble pairs, or random forcings for constant fits.
  int samples = 100;
  /// Largest |m| of random fields; 0 means points / 8.
  int field_max_mode = 0;
  /// Bilinear ensemble without an explicit lambda range: the fit window
  /// starts where the weighted term of every lambda-norm exceeds the
  /// seminorm part by this factor, and spans one decade.
  double dominance = 10.0;
  /// Grid for refinement oracles; 0 disables them.
  int refine_points = 0;
  /// Width of the Gaussian forcing bump of the scaling sweeps.
  double bump_width = 1.5;
  /// Amplitude of a gradient added to the scaling forcing.
  double gradient_amplitude = 0.0;
  CutoffSpec cutoff;
  /// Size of the manufactured solution in the nonlinear MMS cases.
  double amplitude = 1e-2;
  /// Picard settings.
  double rho = 1.0;
  double gamma = 0.0;  // 0: the admissible value keeping the largest radius
  double picard_tol = 1e-12;
  int picard_max_iter = 100;
  /// Named tolerances; defaults filled by tolerance().
  std::map<std::string, double> tolerances;
  std::filesystem::path output;

  int n() const noexcept { return grid.dim; }
  double tolerance(const std::string& name) const;
  /// The lambda values of the sweep (explicit grid or generated).
  std::vector<double> lambdas() const;
  /// Throws std::invalid_argument on an inconsistent configuration.
  void validate() const;
  /// Throws std::invalid_argument if the smallest lambda is below c_wake / L.
  void check_wake() const;
};

ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::filesystem::path& path);
/// Defaults for each experiment, used by the CLI when no file is given.
ExperimentConfig default_config(Experiment e);

// ---------------------------------------------------------------- fields

/// Independent generator per (seed, stream); streams never overlap.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream);

/// Divergence-free real field with spatial modes min_mode <= |m| <= max_mode,
/// unit root-mean-square. The draw depends only on (seed, stream, band) and
/// not on the grid size, so the same field can be sampled on finer grids.
SpectralField random_solenoidal(const GridSpec& grid, int min_mode, int max_mode, std::uint64_t seed,
                                std::uint64_t stream);
/// Zero-mean real scalar with the same band convention.
SpectralField random_scalar(const GridSpec& grid, int min_mode, int max_mode, std::uint64_t seed,
                            std::uint64_t stream);
/// Purely oscillatory solenoidal field with time modes 1..K.
TimePeriodicField random_oscillatory(const GridSpec& grid, int min_mode, int max_mode, double period, int K,
                                     std::uint64_t seed, std::uint64_t stream);

// ---------------------------------------------------------------- fits

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 1.0;
  /// Largest change of the slope when one point is removed.
  double leverage = 0.0;
  int points = 0;
};

/// Least-squares fit of log y = slope log x + intercept. Throws
/// std::invalid_argument for fewer than two points or non-positive data.
LogLogFit fit_loglog(std::span<const double> x, std::span<const double> y);

// ---------------------------------------------------------------- reports

struct Assertion {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ExperimentReport {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  /// Fitted slopes, constants and flags, in insertion order.
  std::vector<std::pair<std::string, double>> summary;
  std::vector<Assertion> assertions;

  bool passed() const;
  std::vector<double> column(const std::string& name) const;
  double value(const std::string& name) const;
  void add(const std::string& key, double v) { summary.emplace_back(key, v); }
  void check(const std::string& what, bool ok, const std::string& detail);
};

/// Table rows of every lambda plus the fitted slopes.
using ScalingResult = ExperimentReport;

/// Deterministic CSV of the table: header row, 17 significant digits.
void emit_csv(const ExperimentReport& report, const std::filesystem::path& path);
void emit_csv(const ExperimentReport& report, std::ostream& out);
/// Summary and assertions as "key,value" / "assertion,PASS|FAIL,detail" rows.
void emit_summary_csv(const ExperimentReport& report, std::ostream& out);
/// Whitespace-separated table with a '#' header, for gnuplot.
void emit_dat(const ExperimentReport& report, std::ostream& out);

// ---------------------------------------------------------------- experiments

/// Linear steady, linear time-periodic and nonlinear (steady and
/// time-periodic) manufactured solutions.
ExperimentReport run_mms(const ExperimentConfig& cfg);
/// Left- and right-hand sides of the steady estimates over the lambda sweep.
ScalingResult run_scaling_steady(const ExperimentConfig& cfg);
/// Steady rows of the time-periodic solution and the oscillatory ratio.
ScalingResult run_scaling_tp(const ExperimentConfig& cfg);
/// Six-ratio bilinear ensemble with fitted exponents and constants.
ExperimentReport run_bilinear_ensemble(const ExperimentConfig& cfg);
/// Picard runs on data from the radius schedule.
ExperimentReport run_picard_steady(const ExperimentConfig& cfg);
ExperimentReport run_picard_tp(const ExperimentConfig& cfg);
/// Lifting identities and the lifting load sweep.
ExperimentReport run_lifting_check(const ExperimentConfig& cfg);
ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// Threads for sweep points and ensemble samples; 0 keeps the default.
/// Results do not depend on the thread count.
void set_thread_count(int threads);

/// Rows n, q, r, s, M, delta, theta and the admissibility of each problem.
ExperimentReport exponent_table(int n, double q, double r);

}  // namespace oseenlab
