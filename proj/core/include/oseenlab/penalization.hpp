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

#include <array>
#include <stdexcept>

#include "oseenlab/oseen.hpp"

namespace oseenlab {

/// Indicator of the obstacle B and the Brinkman parameter eta: inside B the
/// momentum equation carries the extra term eta^{-1} u.
struct ObstacleMask {
  ScalarField indicator;
  double penalization = 1.0;

  /// Ball of the given radius; center defaults to the box center.
  static ObstacleMask ball(const GridSpec& grid, double radius, double penalization);
  static ObstacleMask ball(const GridSpec& grid, const std::array<double, 3>& center, double radius,
                           double penalization);
  /// No obstacle.
  static ObstacleMask empty(const GridSpec& grid, double penalization = 1.0);

  bool is_empty() const;
  /// 0/1 values, eta > 0, and no marked cell within two cells of the box edge.
  void validate() const;
};

struct PenalizedSolve {
  StokesPair pair;
  int iterations = 0;
  double final_update = 0.0;  // relative L^2 change of the last Richardson step
  double relaxation = 1.0;    // damping used by the Richardson update
  bool converged = false;
  double obstacle_l2 = 0.0;   // || u ||_{2, B}
  double obstacle_max = 0.0;  // max_B |u|
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, PenalizedSolve report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const PenalizedSolve& report() const noexcept { return report_; }

 private:
  PenalizedSolve report_;
};

/// Fixed point of u = S_lambda(f - eta^{-1} chi_B u) by damped Richardson
/// iteration with the whole-box Oseen solve as preconditioner. lambda = 0
/// (Brinkman-Stokes) is accepted. Stops when the relative update is <= tol;
/// throws ConvergenceError after max_iter steps.
PenalizedSolve solve_exterior_penalized(const VectorField& f, const OseenParams& params, const ObstacleMask& mask,
                                        double tol = 1e-10, int max_iter = 5000,
                                        const VectorField* initial = nullptr);

}  // namespace oseenlab
