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

#include <random>

#include "oseenlab/exponents.hpp"
#include "oseenlab/picard.hpp"

using namespace oseenlab;

TEST_CASE("M and delta case table") {
  CHECK(exponents_mdelta(3, 1.4).M == 2);
  CHECK(exponents_mdelta(3, 2.0).M == 0);
  CHECK(exponents_mdelta(3, 2.0).delta == 0);
  CHECK(exponents_mdelta(2, 2.0).delta == 1);
  CHECK(exponents_mdelta(3, 3.0).M == 1);

  // Branch boundaries: r = n/(n-1) is closed on the M = 2 side, r = n opens M = 1.
  CHECK(exponents_mdelta(3, 1.5).M == 2);
  CHECK(exponents_mdelta(3, std::nextafter(1.5, 2.0)).M == 0);
  CHECK(exponents_mdelta(3, std::nextafter(3.0, 0.0)).M == 0);
  CHECK(exponents_mdelta(4, 4.0).M == 1);
  // n = r = 2 meets both the first and third case; the first listed wins.
  CHECK(exponents_mdelta(2, 2.0).M == 2);
  CHECK(exponents_mdelta(2, 2.5).M == 1);
  CHECK(exponents_mdelta(2, 1.9).M == 2);

  CHECK_THROWS_AS(exponents_mdelta(3, 4.0 / 3.0), std::invalid_argument);
  CHECK_THROWS_AS(exponents_mdelta(3, 4.0), std::invalid_argument);
  CHECK_THROWS_AS(exponents_mdelta(1, 1.5), std::invalid_argument);
}

TEST_CASE("theta exponent") {
  CHECK(theta_exponent(3, 4.0, 2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(theta_form_s(3, 8.0, 2.0) == doctest::Approx(8.0 / 11.0).epsilon(1e-15));
  CHECK(theta_form_r(3, 8.0, 2.0) == doctest::Approx(8.0 / 11.0).epsilon(1e-15));
  CHECK_THROWS_AS(theta_exponent(3, 3.0, 2.0), std::invalid_argument);

  for (double r : {1.5, 2.0, 2.5}) {
    double prev = 2.0;
    const double s = (4.0 * r) / (4.0 - r);
    for (int i = 0; i < 200; ++i) {
      const double q = s + 0.25 * i;
      const double t = theta_exponent(3, q, r);
      CHECK(t <= prev);
      CHECK(t >= 0.0);
      CHECK(t <= 1.0);
      prev = t;
    }
  }
}

TEST_CASE("theta forms agree on random admissible inputs") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dim(2, 8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const int n = dim(rng);
    const double r = (n + 1.0) / n + u(rng) * ((n + 1.0) - (n + 1.0) / n) * 0.999;
    const double s = (n + 1.0) * r / (n + 1.0 - r);
    const double q = s * (1.0 + 10.0 * u(rng));
    const double a = theta_form_s(n, q, r);
    const double b = theta_form_r(n, q, r);
    worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(a)));
  }
  CHECK(worst <= 1e-14);
}

TEST_CASE("admissibility windows") {
  // Time-periodic window for n = 3 is (12/5, 4].
  const auto [lo, hi] = timeperiodic_q_window(3);
  CHECK(lo == doctest::Approx(12.0 / 5.0).epsilon(1e-15));
  CHECK(hi == 4.0);
  CHECK(admissibility(3, 3.0, 1.6, Problem::TimePeriodicNS).ok);
  const Admissibility low = admissibility(3, 2.0, 1.6, Problem::TimePeriodicNS);
  CHECK_FALSE(low.ok);
  CHECK_FALSE(low.violated.empty());

  // Endpoints: q = 12/5 excluded, q = 4 included (r chosen inside the r-window).
  const auto q_only = [](double q) {
    for (const std::string& v : admissibility(3, q, 1.4, Problem::TimePeriodicNS).violated)
      if (v.find("q") != std::string::npos && v.find("1/r") == std::string::npos) return false;
    return true;
  };
  CHECK_FALSE(q_only(12.0 / 5.0));
  CHECK(q_only(std::nextafter(12.0 / 5.0, 3.0)));
  CHECK(q_only(4.0));
  CHECK_FALSE(q_only(std::nextafter(4.0, 5.0)));
  CHECK(admissibility(3, 4.0, 2.0, Problem::TimePeriodicNS).ok);

  // q = 1 meets q >= n/3 but fails the open domain.
  const Admissibility dom = admissibility(3, 1.0, 1.5, Problem::SteadyNS);
  CHECK_FALSE(dom.ok);
  bool domain_flag = false;
  bool q_third = false;
  for (const std::string& v : dom.violated) {
    domain_flag = domain_flag || v.find("domain") != std::string::npos;
    q_third = q_third || v == "q >= n/3";
  }
  CHECK(domain_flag);
  CHECK_FALSE(q_third);

  CHECK(admissibility(3, 4.0, 2.0, Problem::SteadyNS).ok);
  CHECK(admissibility(3, 4.0, 2.0, Problem::LinearFull).ok);
  CHECK_FALSE(admissibility(3, 3.0, 2.0, Problem::LinearFull).ok);
  CHECK_FALSE(admissibility(2, 4.0, 1.5, Problem::SteadyNS).ok);
}

TEST_CASE("gamma interval") {
  const OpenInterval a = gamma_interval(3, 0, 1.0, 0.5, 1.0);
  CHECK(a.lo == 1.0);
  CHECK(a.hi == doctest::Approx(4.0));
  const OpenInterval b = gamma_interval(3, 1, 1.0, 0.5, 1.0);
  CHECK(b.lo == doctest::Approx(4.0 / 3.0));
  CHECK(b.hi == doctest::Approx(2.0));
  CHECK_THROWS_AS(gamma_interval(3, 1, 1.0, 0.5, 2.0), std::domain_error);
  CHECK(std::isinf(gamma_interval(3, 0, 0.0, 0.0, -1.0).hi));
}

TEST_CASE("profile assembly") {
  const ExponentProfile p = make_profile(3, 4.0, 2.0, 1.0, 2.0, 0.5);
  CHECK(p.s == doctest::Approx(4.0));
  CHECK(p.M == 0);
  CHECK(*p.theta == doctest::Approx(1.0));
  REQUIRE(p.gamma.has_value());
  CHECK(p.gamma->lo >= 1.0);
  CHECK(p.gamma->hi == doctest::Approx(2.0));
  CHECK_FALSE(make_profile(3, 3.0, 2.0).theta.has_value());
}

TEST_CASE("radius schedule") {
  const ExponentProfile p = make_profile(3, 4.0, 2.0, 1.0, 2.0, 0.5);
  for (double gamma : {1.1, 1.5, 1.7}) {
    const Schedule s = radius_schedule(0.5, gamma, p, 3.0);
    for (double e : s.exponents) CHECK(e > 1.0);
    CHECK(s.holds());
    CHECK(s.config.lambda == doctest::Approx(std::pow(s.config.rho, gamma)).epsilon(1e-15));
    CHECK(s.config.epsilon == s.config.lambda);
  }
  const Schedule s = radius_schedule(0.5, 1.5, p, 3.0);
  const Schedule t = radius_schedule(s.config.rho / 2, 1.5, p, 3.0);
  CHECK(t.config.lambda / s.config.lambda == doctest::Approx(std::pow(2.0, -1.5)).epsilon(1e-14));

  CHECK_THROWS_AS(radius_schedule(0.5, 2.5, p, 3.0), std::domain_error);
  CHECK_THROWS_AS(radius_schedule(0.5, 1.5, p, 1e12, 1e-3), std::runtime_error);
}
