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

#include "oseenlab/norms.hpp"
#include "oseenlab/penalization.hpp"
#include "support.hpp"

using namespace oseenlab;
using testing::Point;

namespace {

OseenParams params(double lambda) {
  OseenParams p;
  p.dim = 2;
  p.lambda = lambda;
  p.lambda_max = 1.0;
  return p;
}

// Smooth bump centered in the box pushing along e_1.
VectorField bump_forcing(const GridSpec& g) {
  const double c = std::numbers::pi * g.half_period;
  return testing::sample(g, [&](const Point& x, int k) {
    if (k != 0) return 0.0;
    const double d2 = (x[0] - c) * (x[0] - c) + (x[1] - c) * (x[1] - c);
    return std::exp(-d2 / 0.5);
  });
}

// Sum of |u| downstream minus its mirror image upstream, relative to the total.
double mirror_asymmetry(const VectorField& u) {
  const GridSpec& g = u.grid();
  const int n = g.points;
  double diff = 0.0;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const int mi = (n - i) % n;
    for (int j = 0; j < n; ++j) {
      const std::size_t a = g.flat(i, j, 0);
      const std::size_t b = g.flat(mi, j, 0);
      const double ma = std::hypot(u.component(0)[a], u.component(1)[a]);
      const double mb = std::hypot(u.component(0)[b], u.component(1)[b]);
      diff += std::abs(ma - mb);
      total += ma;
    }
  }
  return diff / total;
}

}  // namespace

TEST_CASE("mask construction") {
  const GridSpec g = testing::grid(2, 32);
  const ObstacleMask m = ObstacleMask::ball(g, 0.6, 1e-2);
  CHECK_NOTHROW(m.validate());
  CHECK_FALSE(m.is_empty());
  double cells = 0.0;
  for (double v : m.indicator.values()) cells += v;
  CHECK(cells * g.cell_volume() == doctest::Approx(std::numbers::pi * 0.36).epsilon(0.15));

  CHECK(ObstacleMask::empty(g).is_empty());
  CHECK_THROWS_AS(ObstacleMask::ball(g, 0.6, 0.0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(ObstacleMask::ball(g, 3.1, 1e-2).validate(), std::invalid_argument);
  ObstacleMask frac = m;
  frac.indicator[0] = 0.5;
  CHECK_THROWS_AS(frac.validate(), std::invalid_argument);
}

TEST_CASE("empty mask is the plain solve") {
  const GridSpec g = testing::grid(2, 32);
  const VectorField f = bump_forcing(g);
  const PenalizedSolve s = solve_exterior_penalized(f, params(0.5), ObstacleMask::empty(g));
  const StokesPair plain = solve_steady(f, params(0.5));
  CHECK(testing::max_diff(s.pair.velocity, plain.velocity) == 0.0);
  CHECK(s.converged);
}

TEST_CASE("penalized solve converges and suppresses the obstacle velocity") {
  const GridSpec g = testing::grid(2, 64);
  const VectorField f = bump_forcing(g);
  std::vector<double> inside;
  for (double eta : {4e-2, 2e-2, 1e-2}) {
    const PenalizedSolve s = solve_exterior_penalized(f, params(0.5), ObstacleMask::ball(g, 0.5, eta), 1e-10);
    CHECK(s.converged);
    CHECK(s.final_update <= 1e-10);
    inside.push_back(s.obstacle_l2);
    const Residual div = residual(s.pair, VectorField(g), params(0.5));
    CHECK(div.divergence <= 1e-11 * (1 + lq_norm(f, 2.0)));
  }
  CHECK(inside[1] <= inside[0]);
  CHECK(inside[2] <= inside[1]);
}

TEST_CASE("wake signature") {
  const GridSpec g = testing::grid(2, 64);
  const VectorField f = bump_forcing(g);
  const ObstacleMask mask = ObstacleMask::ball(g, 0.5, 2e-2);
  const PenalizedSolve stokes = solve_exterior_penalized(f, params(0.0), mask);
  const PenalizedSolve oseen = solve_exterior_penalized(f, params(0.8), mask);
  CHECK(mirror_asymmetry(stokes.pair.velocity) <= 1e-9);
  CHECK(mirror_asymmetry(oseen.pair.velocity) >= 1e-2);
}

TEST_CASE("fixed point does not depend on the initial iterate") {
  const GridSpec g = testing::grid(2, 32);
  const VectorField f = bump_forcing(g);
  const ObstacleMask mask = ObstacleMask::ball(g, 0.5, 5e-2);
  const PenalizedSolve a = solve_exterior_penalized(f, params(0.5), mask, 1e-12);
  const VectorField start = testing::solenoidal(g, 3, 2);
  const PenalizedSolve b = solve_exterior_penalized(f, params(0.5), mask, 1e-12, 5000, &start);
  CHECK(testing::max_diff(a.pair.velocity, b.pair.velocity) <= 1e-9 * testing::max_abs(a.pair.velocity));

  const PenalizedSolve again = solve_exterior_penalized(f, params(0.5), mask, 1e-12);
  CHECK(testing::max_diff(a.pair.velocity, again.pair.velocity) == 0.0);
}

TEST_CASE("iteration budget exhaustion is reported") {
  const GridSpec g = testing::grid(2, 32);
  const ObstacleMask mask = ObstacleMask::ball(g, 0.5, 1e-3);
  try {
    solve_exterior_penalized(bump_forcing(g), params(0.5), mask, 1e-14, 3);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK_FALSE(e.report().converged);
    CHECK(e.report().iterations == 3);
    CHECK(e.report().final_update > 1e-14);
  }
}
