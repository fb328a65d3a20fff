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

#include "oseenlab/field.hpp"

namespace oseenlab {

struct OseenParams {
  double lambda = 1.0;
  double lambda_max = 1.0;
  int dim = 3;

  /// 0 < lambda <= lambda_max, dim in {2, 3}; throws std::invalid_argument.
  void validate() const;
};

struct StokesPair {
  VectorField velocity;
  ScalarField pressure;
};

/// Coefficient form of a velocity/pressure pair.
struct SpectralPair {
  SpectralField velocity;  // dim blocks
  SpectralField pressure;  // one block
};

struct TimePeriodicPair {
  TimePeriodicField velocity;
  TimePeriodicField pressure;
};

/// f(xi) -> (I - xi xi^T / |xi|^2) f(xi); the xi = 0 mode passes through.
/// The projector uses the same Nyquist convention as spectral_derivative, so
/// divergence() of the result vanishes to round-off.
SpectralField leray_project(const SpectralField& f);
VectorField leray_project(const VectorField& f);

/// Core multiplier shared by every solve:
///   u(xi) = P f(xi) / (|xi|^2 + i lambda xi_1 + i omega),  p(xi) = -i xi.f(xi) / |xi|^2.
/// At xi = 0 the velocity is f(0)/(i omega) for omega != 0 and zero otherwise;
/// the pressure mean is zero. Coefficients carrying a Nyquist index are set
/// to zero. lambda >= 0 is accepted here.
SpectralPair apply_oseen_symbol(const SpectralField& f, double lambda, double omega);

/// -Laplace u + lambda d_1 u + grad p = f, div u = 0 on the box, zero-mean u and p.
StokesPair solve_steady(const VectorField& f, const OseenParams& params);
SpectralPair solve_steady(const SpectralField& f, const OseenParams& params);

/// Time mode k of the time-periodic problem, omega_k = 2 pi k / T.
SpectralPair solve_mode(const SpectralField& f_k, int k, double period, const OseenParams& params);

/// Mode-by-mode solve of d_t u - Laplace u + lambda d_1 u + grad p = F.
TimePeriodicPair solve_timeperiodic(const TimePeriodicField& f, const OseenParams& params);

/// Time average (the k = 0 mode) and its complement.
VectorField project_steady(const TimePeriodicField& f);
TimePeriodicField project_oscillatory(const TimePeriodicField& f);

struct Residual {
  double momentum = 0.0;    // || -Laplace u + lambda d_1 u + grad p - f ||_2
  double divergence = 0.0;  // || div u ||_2
};

Residual residual(const StokesPair& pair, const VectorField& f, const OseenParams& params);
Residual residual(const SpectralPair& pair, const SpectralField& f, double lambda);

/// Space-time L^2 residual of d_t u - Laplace u + lambda d_1 u + grad p - F,
/// with the time mean normalized by 1/T (Plancherel over time modes).
Residual residual(const TimePeriodicPair& pair, const TimePeriodicField& f, double lambda);

/// Box L^2 norm from coefficients, sqrt(Vol * sum |c|^2).
double l2_norm_coefficients(const SpectralField& f);

}  // namespace oseenlab
