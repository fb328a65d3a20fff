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

#include <doctest.h>

#include "oseenlab/nonlinear.hpp"
#include "oseenlab/oseen.hpp"
#include "oseenlab/spectral.hpp"
#include "support.hpp"

using namespace oseenlab;

namespace {

GridSpec box() { return testing::grid(2, 64); }

CutoffSpec cutoff() {
  CutoffSpec spec;
  spec.outer_radius = 2.5;
  return spec;
}

LiftingField lifting(double lambda) { return build_lifting(lambda, cutoff(), box()); }

TimePeriodicField random_tp(const GridSpec& g, double T, int K, std::uint64_t seed, bool with_mean = true) {
  TimePeriodicField u(g, g.dim, T, K);
  for (int k = 0; k <= K; ++k) {
    if (k == 0 && !with_mean) continue;
    const SpectralField a = to_spectral(testing::solenoidal(g, 3, seed + 10 * k));
    const SpectralField b = to_spectral(testing::solenoidal(g, 3, seed + 10 * k + 5));
    if (k == 0) {
      u.mode(0) = a;
    } else {
      // a cos + b sin
      u.mode(k) = Complex(0.5, 0.0) * a + Complex(0.0, -0.5) * b;
      u.mode(-k) = Complex(0.5, 0.0) * a + Complex(0.0, 0.5) * b;
    }
  }
  return u;
}

}  // namespace

TEST_CASE("nonlinearity at zero") {
  const double lambda = 0.3;
  const LiftingField lift = lifting(lambda);
  const SpectralField zero(box(), 2);
  SpectralField expected = laplacian(lift.coefficients) - Complex(lambda, 0.0) * spectral_derivative(lift.coefficients, 1) -
                           convective_term(lift.coefficients, lift.coefficients);
  CHECK(max_abs(nonlinearity(zero, lift, lambda) - expected) <= 1e-14);
}

TEST_CASE("skew symmetry without lifting") {
  const GridSpec g = box();
  const LiftingField none = build_lifting(0.0, cutoff(), g);
  const VectorField u = testing::solenoidal(g, 4, 3);
  const VectorField n = nonlinearity(u, none, 0.0);
  double integral = 0.0;
  double scale = 0.0;
  for (int c = 0; c < 2; ++c) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      integral += u.component(c)[i] * n.component(c)[i];
      scale += std::abs(u.component(c)[i] * n.component(c)[i]);
    }
  }
  CHECK(std::abs(integral) * g.cell_volume() <= 1e-9);
  CHECK(std::abs(integral) <= 1e-12 * scale);
}

TEST_CASE("differences cancel the lifting-only terms") {
  const double lambda = 0.3;
  const LiftingField lift = lifting(lambda);
  const SpectralField u1 = to_spectral(testing::solenoidal(box(), 3, 1));
  const SpectralField u2 = to_spectral(testing::solenoidal(box(), 3, 2));
  const SpectralField diff = nonlinearity(u1, lift, lambda) - nonlinearity(u2, lift, lambda);
  // Expected: -(u1.grad u1 - u2.grad u2) - (u1 - u2).grad V - V.grad (u1 - u2).
  const SpectralField du = u1 - u2;
  const SpectralField expected = convective_term(u2, u2) - convective_term(u1, u1) - convective_term(du, lift.coefficients) -
                                 convective_term(lift.coefficients, du);
  CHECK(max_abs(diff - expected) <= 1e-13);
}

TEST_CASE("grid mismatch is rejected") {
  const LiftingField lift = lifting(0.1);
  CHECK_THROWS_AS(nonlinearity(SpectralField(testing::grid(2, 32), 2), lift, 0.1), std::invalid_argument);
}

TEST_CASE("time-periodic nonlinearity") {
  const GridSpec g = box();
  const double lambda = 0.2;
  const LiftingField lift = lifting(lambda);
  const double T = 1.5;
  const int K = 2;
  CHECK(nonlinear_time_samples(K) == 9);

  // Constant in time reduces to the steady nonlinearity.
  const SpectralField v = to_spectral(testing::solenoidal(g, 3, 4));
  const TimePeriodicField steady = nonlinearity(TimePeriodicField::constant(v, T, K), lift, lambda);
  CHECK(max_abs(steady.mode(0) - nonlinearity(v, lift, lambda)) <= 1e-13);
  for (int k = 1; k <= K; ++k) CHECK(max_abs(steady.mode(k)) <= 1e-14);

  // Time-aliasing free: u = a cos t, N has modes 0 and 2 only; u with K = 1 and
  // N truncated to K = 1 keeps the exact k = 0 part.
  const TimePeriodicField u = random_tp(g, T, K, 40);
  const TimePeriodicField n = nonlinearity(u, lift, lambda);
  CHECK(n.hermitian_defect() <= 1e-13);
  // Pointwise in time: N(u)(t) equals the steady nonlinearity of u(t) projected
  // to |k| <= K; compare the k = 0 mode with a fine time quadrature.
  const int fine = 64;
  SpectralField mean(g, 2);
  for (int j = 0; j < fine; ++j) mean += Complex(1.0 / fine, 0.0) * nonlinearity(u.at_time(T * j / fine), lift, lambda);
  CHECK(max_abs(mean - n.mode(0)) <= 1e-12);
}

TEST_CASE("split nonlinearity") {
  const GridSpec g = box();
  const double lambda = 0.2;
  const LiftingField lift = lifting(lambda);
  const double T = 2.0;
  const int K = 2;
  const TimePeriodicField u = random_tp(g, T, K, 50);
  const TimePeriodicField full = nonlinearity(u, lift, lambda);
  const SplitNonlinearity split = split_nonlinearity(u, lift, lambda);

  CHECK(max_abs(split.steady - full.mode(0)) <= 1e-12);
  for (int k = -K; k <= K; ++k) {
    const SpectralField sum = (k == 0 ? split.steady : SpectralField(g, 2)) + split.oscillatory.mode(k);
    CHECK(max_abs(sum - full.mode(k)) <= 1e-12);
  }
  CHECK(max_abs(split.oscillatory.mode(0)) == 0.0);

  SpectralField total(g, 2);
  for (const SpectralField& t : split.steady_terms) total += t;
  CHECK(max_abs(total - split.steady) <= 1e-14);

  // w = 0: the oscillatory terms all vanish.
  const SpectralField v = u.mode(0);
  const SplitNonlinearity steady = split_nonlinearity(TimePeriodicField::constant(v, T, K), lift, lambda);
  for (int k = -K; k <= K; ++k) CHECK(max_abs(steady.oscillatory.mode(k)) <= 1e-14);

  // v = 0: steady part is -P(w.grad w) - V.grad V + Laplace V - lambda d1 V.
  const TimePeriodicField w = project_oscillatory(u);
  const SplitNonlinearity osc = split_nonlinearity(w, lift, lambda);
  const SpectralField expected = osc.steady_terms[1] - convective_term(lift.coefficients, lift.coefficients) +
                                 laplacian(lift.coefficients) - Complex(lambda, 0.0) * spectral_derivative(lift.coefficients, 1);
  CHECK(max_abs(osc.steady - expected) <= 1e-14);
  for (int i : {0, 2, 3}) CHECK(max_abs(osc.steady_terms[i]) == 0.0);
  CHECK(SplitNonlinearity::kSteadyNames.size() == 7);
  CHECK(SplitNonlinearity::kOscillatoryNames.size() == 5);
}
