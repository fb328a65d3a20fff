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
#include "oseenlab/oseen.hpp"
#include "support.hpp"

using namespace oseenlab;
using testing::Point;

TEST_CASE("lq norm of constants and single modes") {
  const GridSpec g = testing::grid(2, 16, 1.3);
  const ScalarField c = testing::sample(g, [](const Point&) { return -2.0; });
  for (double q : {1.5, 2.0, 3.0, 7.0}) CHECK(lq_norm(c, q) == doctest::Approx(2.0 * std::pow(g.volume(), 1.0 / q)).epsilon(1e-13));

  const ScalarField s = testing::sample(g, [&](const Point& x) { return std::sin(x[0] / g.half_period); });
  CHECK(lq_norm(s, 2.0) == doctest::Approx(std::sqrt(g.volume() / 2.0)).epsilon(1e-13));
  CHECK(lq_norm(to_spectral(s), 2.0) == doctest::Approx(std::sqrt(g.volume() / 2.0)).epsilon(1e-13));

  CHECK_THROWS_AS(lq_norm(c, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(lq_norm(c, std::numeric_limits<double>::infinity()), std::invalid_argument);
  ScalarField bad = c;
  bad[3] = std::nan("");
  CHECK_THROWS_AS(lq_norm(bad, 2.0), std::domain_error);
}

TEST_CASE("lq quadrature is grid converged for smooth fields") {
  const auto fn = [](const Point& x, int c) { return std::exp(std::sin(x[0]) * std::cos(x[1] + c)); };
  const VectorField coarse = testing::sample(testing::grid(2, 32), fn);
  const VectorField fine = testing::sample(testing::grid(2, 128), fn);
  for (double q : {1.5, 3.0}) CHECK(std::abs(lq_norm(coarse, q) / lq_norm(fine, q) - 1.0) <= 1e-10);
}

TEST_CASE("Holder consistency on the box") {
  const GridSpec g = testing::grid(3, 16);
  const VectorField u = testing::solenoidal(g, 3, 1);
  const double q1 = 1.5;
  const double q2 = 4.0;
  CHECK(lq_norm(u, q1) <= std::pow(g.volume(), 1.0 / q1 - 1.0 / q2) * lq_norm(u, q2) * (1 + 1e-12));
}

TEST_CASE("sobolev seminorms") {
  const double L = 1.4;
  const GridSpec g = testing::grid(3, 16, L);
  const VectorField c = testing::sample(g, [](const Point&, int k) { return 1.0 + k; });
  CHECK(sobolev_seminorm(c, 1, 3.0) == 0.0);

  const VectorField s = testing::sample(g, [&](const Point& x, int k) { return k == 1 ? std::sin(x[0] / L) : 0.0; });
  for (double q : {2.0, 3.0})
    CHECK(sobolev_seminorm(s, 2, q) == doctest::Approx(lq_norm(s, q) / (L * L)).epsilon(1e-12));

  // Sum over multi-indices: u = sin(x1) + sin(x2) in one component gives two first derivatives.
  const VectorField two = testing::sample(g, [&](const Point& x, int k) {
    return k == 0 ? std::sin(x[0] / L) + std::sin(x[1] / L) : 0.0;
  });
  const ScalarField cos1 = testing::sample(g, [&](const Point& x) { return std::cos(x[0] / L) / L; });
  CHECK(sobolev_seminorm(two, 1, 2.0) == doctest::Approx(2.0 * lq_norm(cos1, 2.0)).epsilon(1e-12));

  const VectorField u = testing::solenoidal(g, 3, 2);
  const double a = -2.7;
  CHECK(sobolev_seminorm(a * u, 2, 2.5) == doctest::Approx(std::abs(a) * sobolev_seminorm(u, 2, 2.5)).epsilon(1e-13));
  CHECK_THROWS_AS(sobolev_seminorm(u, 3, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(sobolev_seminorm(u, 0, 2.0), std::invalid_argument);
}

TEST_CASE("negative norm surrogate") {
  const double L = 1.2;
  const GridSpec g = testing::grid(3, 16, L);
  std::mt19937_64 rng(3);
  const testing::TrigPoly gp = testing::TrigPoly::random(3, 3, 5, rng, L);

  // f = -Laplace(g e_1) returns || grad g ||_r.
  const SpectralField gs = to_spectral(testing::sample(g, [&](const Point& x, int c) { return c == 0 ? gp.value(x) : 0.0; }));
  SpectralField f = laplacian(gs);
  f *= Complex(-1.0, 0.0);
  // || grad g ||_r with the Euclidean magnitude of the gradient.
  VectorField grad(g);
  for (int j = 0; j < 3; ++j) {
    const ScalarField dj = scalar_from_spectral(spectral_derivative(gs, j + 1), 0);
    std::copy(dj.values().begin(), dj.values().end(), grad.component(j).begin());
  }
  const double grad_norm = lq_norm(grad, 3.0);
  const NegativeNorm nn = negative_norm_surrogate(f, 3.0);
  CHECK(nn.value == doctest::Approx(grad_norm).epsilon(1e-12));
  CHECK_FALSE(nn.mean_projected);

  // Single mode: L || cos(x1/L) ||_r.
  const VectorField s = testing::sample(g, [&](const Point& x, int c) { return c == 1 ? std::sin(x[0] / L) : 0.0; });
  const ScalarField cs = testing::sample(g, [&](const Point& x) { return std::cos(x[0] / L); });
  for (double r : {1.5, 2.0, 3.0}) CHECK(negative_norm_surrogate(s, r).value == doctest::Approx(L * lq_norm(cs, r)).epsilon(1e-12));

  // Plancherel at r = 2.
  const SpectralField u = to_spectral(testing::solenoidal(g, 3, 8)) + to_spectral(testing::sample(g, [&](const Point& x, int) { return gp.value(x); }));
  double sum = 0.0;
  for_each_mode(g, [&](const Mode& m) {
    if (m.xi2 == 0.0) return;
    for (int c = 0; c < 3; ++c) sum += std::norm(u.block(c)[m.flat]) / m.xi2;
  });
  CHECK(negative_norm_surrogate(u, 2.0).value == doctest::Approx(std::sqrt(sum * g.volume())).epsilon(1e-12));

  // Mean is projected and flagged.
  VectorField shifted = s;
  for (double& v : shifted.component(0)) v += 3.0;
  const NegativeNorm m = negative_norm_surrogate(shifted, 2.0);
  CHECK(m.mean_projected);
  CHECK(m.value == doctest::Approx(negative_norm_surrogate(s, 2.0).value).epsilon(1e-13));
}

TEST_CASE("Riesz bound for d1 u at r = 2") {
  const GridSpec g = testing::grid(3, 16);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const SpectralField u = to_spectral(testing::solenoidal(g, 4, seed));
    CHECK(negative_norm_surrogate(spectral_derivative(u, 1), 2.0).value <= lq_norm(u, 2.0) * (1 + 1e-12));
  }
}

TEST_CASE("lambda norm") {
  const GridSpec g = testing::grid(3, 16);
  const SpectralField zero(g, 3);
  CHECK(lambda_norm(zero, 0.3, 4.0, 2.0, 3) == 0.0);
  CHECK(sobolev_exponent_s(3, 2.0) == doctest::Approx(4.0));
  CHECK_THROWS_AS(sobolev_exponent_s(3, 4.0), std::invalid_argument);
  CHECK_THROWS_AS(lambda_norm(zero, 0.3, 4.0, 4.5, 3), std::invalid_argument);

  const SpectralField v = to_spectral(testing::solenoidal(g, 3, 4));
  const double lam = 0.3;
  const double expected = sobolev_seminorm(v, 2, 4.0) + sobolev_seminorm(v, 1, 2.0) + std::pow(lam, 0.25) * lq_norm(v, 4.0);
  CHECK(lambda_norm(v, lam, 4.0, 2.0, 3) == doctest::Approx(expected).epsilon(1e-14));

  double prev = 0.0;
  for (double l : {1e-3, 1e-2, 0.1, 1.0, 10.0}) {
    const double now = lambda_norm(v, l, 4.0, 2.0, 3);
    CHECK(now >= prev);
    prev = now;
  }
}

TEST_CASE("maximal regularity norm") {
  const GridSpec g = testing::grid(2, 16);
  const double T = 3.0;
  const SpectralField phi = to_spectral(testing::solenoidal(g, 2, 6));

  const TimePeriodicField steady = TimePeriodicField::constant(phi, T, 2);
  CHECK(maxreg_norm(steady, 3.0) == doctest::Approx(w2q_norm(phi, 3.0)).epsilon(1e-12));

  // u = cos(2 pi t / T) phi at q = 2: time L^2 mean of cos^2 and sin^2 is 1/2.
  TimePeriodicField osc(g, 2, T, 2);
  osc.mode(1) = Complex(0.5, 0.0) * phi;
  osc.mode(-1) = Complex(0.5, 0.0) * phi;
  const double w = 2 * std::numbers::pi / T;
  const double expected = w2q_norm(phi, 2.0) / std::sqrt(2.0) + w * lq_norm(phi, 2.0) / std::sqrt(2.0);
  CHECK(maxreg_norm(osc, 2.0) == doctest::Approx(expected).epsilon(1e-12));

  TimePeriodicField scaled = osc;
  scaled *= -3.0;
  CHECK(maxreg_norm(scaled, 2.5) == doctest::Approx(3.0 * maxreg_norm(osc, 2.5)).epsilon(1e-13));
}

TEST_CASE("norm dispatch") {
  const GridSpec g = testing::grid(3, 8);
  const VectorField u = testing::solenoidal(g, 2, 5);
  NormRequest req;
  req.kind = NormKind::SeminormKq;
  req.k_order = 1;
  req.q_exponent = 3.0;
  CHECK(evaluate_norm(req, u, 3) == doctest::Approx(sobolev_seminorm(u, 1, 3.0)));
  req.kind = NormKind::MaxRegNorm;
  CHECK_THROWS(evaluate_norm(req, u, 3));
  req.kind = NormKind::Lq;
  req.q_exponent = 0.5;
  CHECK_THROWS_AS(req.validate(), std::invalid_argument);
}
