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
#include <string_view>

#include "oseenlab/lifting.hpp"

namespace oseenlab {

/// N(u) = -u.grad u - u.grad V - V.grad u - V.grad V + Laplace V - lambda d_1 V.
/// Every convective product is dealiased. `lambda` multiplies the d_1 V term.
SpectralField nonlinearity(const SpectralField& u, const LiftingField& lift, double lambda);
VectorField nonlinearity(const VectorField& u, const LiftingField& lift, double lambda);

/// Time-periodic N(u): products are formed on a uniform grid of
/// nonlinear_time_samples(K) instants and projected back to |k| <= K.
TimePeriodicField nonlinearity(const TimePeriodicField& u, const LiftingField& lift, double lambda);

/// 4K + 1 samples, enough for the quadratic products to be alias-free in time.
int nonlinear_time_samples(int max_mode);

/// P N(u) and P_perp N(u) written out term by term, with v = P u, w = P_perp u.
struct SplitNonlinearity {
  static constexpr std::array<std::string_view, 7> kSteadyNames{
      "-v.grad v", "-P(w.grad w)", "-v.grad V", "-V.grad v", "-V.grad V", "Laplace V", "-lambda d1 V"};
  static constexpr std::array<std::string_view, 5> kOscillatoryNames{
      "-v.grad w", "-w.grad v", "-Pperp(w.grad w)", "-w.grad V", "-V.grad w"};

  std::array<SpectralField, 7> steady_terms;
  std::array<TimePeriodicField, 5> oscillatory_terms;
  SpectralField steady;           // sum of steady_terms
  TimePeriodicField oscillatory;  // sum of oscillatory_terms
};

SplitNonlinearity split_nonlinearity(const TimePeriodicField& u, const LiftingField& lift, double lambda);

}  // namespace oseenlab
