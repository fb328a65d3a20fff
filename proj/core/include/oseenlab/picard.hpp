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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oseenlab/exponents.hpp"
#include "oseenlab/nonlinear.hpp"
#include "oseenlab/oseen.hpp"

namespace oseenlab {

struct PicardConfig {
  double rho = 1.0;      // radius of A_rho
  double gamma = 1.0;
  double lambda = 1.0;
  double epsilon = 1.0;  // data budget ||f||_q + |f|_{-1,r}
  double tol = 1e-10;
  int max_iter = 200;
  int n = 3;
  double q = 4.0;
  double r = 2.0;
  /// Raise when an iterate leaves A_rho.
  bool enforce_ball = true;
  /// Raise when the data exceed epsilon.
  bool enforce_data = true;
  bool schedule_active = false;
  void validate() const;
};

/// Outcome of the smallness search for lambda = epsilon = rho^gamma.
struct Schedule {
  PicardConfig config;
  double constant = 1.0;
  /// C (rho^{g - gM/(n+1)} + rho^{2 - g theta/(n+1)} + rho^{2 - g zeta/(n+1)} + rho^{2 - g(M+eta)/(n+1)}) / rho
  double first = 0.0;
  /// C (rho^{1 - g theta/(n+1)} + rho^{1 - g zeta/(n+1)} + rho^{1 - g(M+eta)/(n+1)})
  double second = 0.0;
  int halvings = 0;
  /// The four exponents of the first inequality.
  std::array<double, 4> exponents{};
  bool holds() const noexcept { return first <= 1.0 && second <= 0.5; }
};

/// Starts from rho and halves it until both smallness inequalities hold with
/// the constant C. Uses profile.theta_bilinear/zeta/eta, falling back to the
/// conservative values. Throws std::domain_error if gamma lies outside the
/// admissible interval and std::runtime_error when rho drops below floor.
Schedule radius_schedule(double rho, double gamma, const ExponentProfile& profile, double constant,
                         double floor = 1e-12);

struct SolveReport {
  std::vector<double> iterates;  // ||u^{m+1} - u^m|| in the driver norm
  std::vector<double> iterate_norms;
  /// max of update ratios d_m / d_{m-1} from iteration 2 on; 0 when fewer than two updates.
  double contraction_rate = 0.0;
  int measured_ratios = 0;
  double final_residual = 0.0;
  double relative_residual = 0.0;  // final_residual / (||f||_2 + lambda)
  double certificate = 0.0;        // ||F(u*) - u*|| / ||u*||, recomputed from scratch
  double data_size = 0.0;          // ||f||_q + |f|_{-1,r}
  double max_norm = 0.0;           // largest iterate norm
  bool stayed_in_ball = true;
  bool converged = false;
  std::string failure;
};

/// Carries the partial report of a failed run.
class PicardError : public std::runtime_error {
 public:
  PicardError(const std::string& what, SolveReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const SolveReport& report() const noexcept { return report_; }

 private:
  SolveReport report_;
};

struct SteadySolution {
  SpectralPair pair;
  SolveReport report;
};

struct TimePeriodicSolution {
  TimePeriodicPair pair;
  SolveReport report;
};

/// Driver norm of the steady iteration, |v|_{2,q} + |v|_{1,r} + lambda^{1/(n+1)} ||v||_s.
double steady_driver_norm(const SpectralField& u, const PicardConfig& cfg);
/// ||P u||_lambda + ||P_perp u||_{1,2,q}.
double timeperiodic_driver_norm(const TimePeriodicField& u, const PicardConfig& cfg);

/// F(u) = S_lambda(f + N(u)); lambda = 0 is allowed.
SpectralPair picard_map(const SpectralField& f, const SpectralField& u, const LiftingField& lift,
                        double lambda);
TimePeriodicPair picard_map(const TimePeriodicField& f, const TimePeriodicField& u,
                            const LiftingField& lift, double lambda);

/// Fixed point of F from u0 = S_lambda(f + N(0)) unless `initial` is given.
/// Stops when ||u^{m+1} - u^m|| <= tol ||u^{m+1}||. Throws PicardError on
/// divergence (three consecutive update ratios >= 1), on leaving A_rho and on
/// reaching max_iter.
SteadySolution picard_steady(const SpectralField& f, const PicardConfig& cfg, const LiftingField& lift,
                             const SpectralField* initial = nullptr);
SteadySolution picard_steady(const VectorField& f, const PicardConfig& cfg, const LiftingField& lift,
                             const VectorField* initial = nullptr);
TimePeriodicSolution picard_timeperiodic(const TimePeriodicField& f, const PicardConfig& cfg,
                                         const LiftingField& lift,
                                         const TimePeriodicField* initial = nullptr);

/// Largest ratio ||F(a) - F(b)|| / ||a - b|| over the pairs a = center + d_i,
/// b = center - d_i, each d_i rescaled to driver norm `radius`.
double lipschitz_probe(const SpectralField& f, const SpectralField& center, const LiftingField& lift,
                       const PicardConfig& cfg, const std::vector<SpectralField>& directions, double radius);

/// Writes iteration, update, norm columns.
double lipschitz_probe(const TimePeriodicField& f, const TimePeriodicField& center, const LiftingField& lift,
                       const PicardConfig& cfg, const std::vector<TimePeriodicField>& directions, double radius);
void write_report_csv(const SolveReport& report, std::ostream& out);

}  // namespace oseenlab
