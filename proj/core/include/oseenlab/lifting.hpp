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
#include <optional>

#include "oseenlab/field.hpp"

namespace oseenlab {

/// Radial cut-off phi with phi = 1 on B_R and phi = 0 outside B_{R_out}. The
/// transition is 1 - S(t), t = (rho - R)/(R_out - R), with
///   S(t) = 1 / (1 + exp(a/t - a/(1-t))),
/// which is C-infinity and flat to all orders at both radii; a is `sharpness`.
struct CutoffSpec {
  double inner_radius = 0.5;
  double outer_radius = 3.0;
  double sharpness = 2.0;
  /// Defaults to the box center.
  std::optional<std::array<double, 3>> center;

  void validate() const;
  std::array<double, 3> center_on(const GridSpec& grid) const;
};

struct ProfileValue {
  double value = 0.0;
  double d1 = 0.0;  // d phi / d rho
  double d2 = 0.0;  // d^2 phi / d rho^2
};

/// Closed-form profile and radial derivatives at distance rho.
ProfileValue cutoff_profile(const CutoffSpec& spec, double rho);

/// Samples phi on the grid. Throws std::invalid_argument if the radii are
/// misordered or B_{R_out} comes within two cells of the box edge.
ScalarField build_cutoff(const CutoffSpec& spec, const GridSpec& grid);

struct LiftingField {
  VectorField V;
  SpectralField coefficients;
  double lambda_used = 0.0;
};

/// V = (lambda/2) [-Laplace + grad div] (phi(x) (x_2 - c_2)^2 e_1), applied
/// spectrally to the sampled generating field; Nyquist modes are dropped so
/// div V vanishes to round-off. lambda = 0 gives V = 0.
LiftingField build_lifting(double lambda, const CutoffSpec& spec, const GridSpec& grid);

/// -Laplace V + lambda d_1 V.
SpectralField lifting_forcing(const LiftingField& lift, double lambda);

struct LiftingLoad {
  double lq = 0.0;        // || -Laplace V + lambda d_1 V ||_q
  double negative = 0.0;  // surrogate |.|_{-1,r} of the same field
  double ratio = 0.0;     // (lq + negative) / (lambda (1 + lambda)); 0 when lambda = 0
};

LiftingLoad lifting_load(const LiftingField& lift, double lambda, double q, double r);

}  // namespace oseenlab
