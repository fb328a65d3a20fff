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

#include <numbers>

#include "oseenlab/lifting.hpp"
#include "oseenlab/norms.hpp"
#include "oseenlab/spectral.hpp"
#include "support.hpp"

using namespace oseenlab;
using testing::Point;

TEST_CASE("cutoff profile") {
  const CutoffSpec spec;
  CHECK(cutoff_profile(spec, 0.0).value == 1.0);
  CHECK(cutoff_profile(spec, spec.inner_radius).value == 1.0);
  CHECK(cutoff_profile(spec, spec.outer_radius).value == 0.0);
  CHECK(cutoff_profile(spec, 10.0).value == 0.0);
  for (double rho : {spec.inner_radius, spec.outer_radius}) {
    CHECK(cutoff_profile(spec, rho).d1 == 0.0);
    CHECK(cutoff_profile(spec, rho).d2 == 0.0);
  }
  double prev = 1.0;
  for (int i = 0; i <= 200; ++i) {
    const double rho = spec.inner_radius + (spec.outer_radius - spec.inner_radius) * i / 200.0;
    const ProfileValue p = cutoff_profile(spec, rho);
    CHECK(p.value <= prev);
    CHECK(p.value >= 0.0);
    prev = p.value;
  }
  // Finite-difference check of the analytic derivatives.
  const double h = 1e-5;
  for (double rho : {0.9, 1.5, 2.4}) {
    const ProfileValue p = cutoff_profile(spec, rho);
    const double d1 = (cutoff_profile(spec, rho + h).value - cutoff_profile(spec, rho - h).value) / (2 * h);
    const double d2 = (cutoff_profile(spec, rho + h).d1 - cutoff_profile(spec, rho - h).d1) / (2 * h);
    CHECK(p.d1 == doctest::Approx(d1).epsilon(1e-7));
    CHECK(p.d2 == doctest::Approx(d2).epsilon(1e-6));
  }

  CutoffSpec bad = spec;
  bad.outer_radius = 0.3;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = spec;
  bad.inner_radius = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("sampled cutoff") {
  const GridSpec g = testing::grid(2, 64);
  CutoffSpec spec;
  spec.inner_radius = 0.5;
  spec.outer_radius = 2.5;
  const ScalarField phi = build_cutoff(spec, g);
  const int c = g.points / 2;
  CHECK(phi[g.flat(c, c, 0)] == 1.0);
  CHECK(phi[g.flat(0, 0, 0)] == 0.0);
  double asym = 0.0;
  for (int i = 0; i < g.points; ++i)
    for (int j = 0; j < g.points; ++j)
      asym = std::max(asym, std::abs(phi[g.flat(i, j, 0)] - phi[g.flat((g.points - i) % g.points, (g.points - j) % g.points, 0)]));
  CHECK(asym <= 1e-13);

  CutoffSpec wide = spec;
  wide.outer_radius = 3.1;
  CHECK_THROWS_AS(build_cutoff(wide, g), std::invalid_argument);
}

TEST_CASE("spectral second derivative of the profile on a 128-point axis") {
  // One-dimensional slice: phi(x_1) along a line through the center of a thin 2D box.
  const GridSpec g = testing::grid(2, 128);
  CutoffSpec spec;
  spec.inner_radius = 0.2;
  spec.outer_radius = 3.0;
  const double c = std::numbers::pi;
  const ScalarField phi = testing::sample(g, [&](const Point& x) { return cutoff_profile(spec, std::abs(x[0] - c)).value; });
  const ScalarField d2 = scalar_from_spectral(spectral_derivative(spectral_derivative(to_spectral(phi), 1), 1));
  double err = 0.0;
  for_each_point(g, [&](std::size_t i, const Point& x) {
    err = std::max(err, std::abs(d2[i] - cutoff_profile(spec, std::abs(x[0] - c)).d2));
  });
  CHECK(err <= 1e-6);
}

TEST_CASE("lifting identities") {
  const GridSpec g = testing::grid(2, 256);
  const CutoffSpec spec;
  const double lambda = 0.2;
  const LiftingField lift = build_lifting(lambda, spec, g);
  CHECK(lift.lambda_used == lambda);

  CHECK(lq_norm(divergence(lift.coefficients), 2.0) <= 1e-10);

  const std::array<double, 3> center = spec.center_on(g);
  double on_ball = 0.0;
  for_each_point(g, [&](std::size_t i, const Point& x) {
    if (std::hypot(x[0] - center[0], x[1] - center[1]) > spec.inner_radius) return;
    on_ball = std::max(on_ball, std::abs(lift.V.component(0)[i] + lambda));
    on_ball = std::max(on_ball, std::abs(lift.V.component(1)[i]));
  });
  CHECK(on_ball <= 1e-10);

  const LiftingField unit = build_lifting(1.0, spec, g);
  CHECK(max_abs(lift.coefficients - Complex(lambda, 0.0) * unit.coefficients) <= 1e-15);

  const LiftingField none = build_lifting(0.0, spec, g);
  CHECK(testing::max_abs(none.V) == 0.0);
  const LiftingLoad zero = lifting_load(none, 0.0, 2.0, 1.5);
  CHECK(zero.lq == 0.0);
  CHECK(zero.negative == 0.0);

  CHECK_THROWS_AS(build_lifting(-1.0, spec, g), std::invalid_argument);
}

TEST_CASE("lifting in three dimensions is solenoidal") {
  const GridSpec g = testing::grid(3, 32);
  CutoffSpec spec;
  spec.outer_radius = 2.7;
  const LiftingField lift = build_lifting(0.1, spec, g);
  CHECK(lq_norm(divergence(lift.coefficients), 2.0) <= 1e-10);
}

TEST_CASE("lifting load scaling") {
  const GridSpec g = testing::grid(2, 128);
  const CutoffSpec spec;
  std::vector<double> ratios;
  for (double lambda : {1e-3, 1e-2, 1e-1}) {
    const LiftingLoad load = lifting_load(build_lifting(lambda, spec, g), lambda, 2.0, 1.5);
    ratios.push_back(load.ratio);
    const LiftingLoad twice = lifting_load(build_lifting(2 * lambda, spec, g), 2 * lambda, 2.0, 1.5);
    const double factor = (twice.lq + twice.negative) / (load.lq + load.negative);
    CHECK(factor >= 2.0 * (1 - 1e-12));
    CHECK(factor <= 2.0 * (1 + 2 * lambda) / (1 + lambda) * (1 + 1e-12));
  }
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  CHECK((*hi - *lo) / (*hi + *lo) <= 0.05);
}
