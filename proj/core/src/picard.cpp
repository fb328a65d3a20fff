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

#include "oseenlab/picard.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "oseenlab/csv.hpp"
#include "oseenlab/norms.hpp"
#include "oseenlab/spectral.hpp"

namespace oseenlab {

void PicardConfig::validate() const {
  if (!(rho > 0.0)) throw std::invalid_argument("PicardConfig: rho must be positive");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("PicardConfig: lambda must be >= 0");
  if (!(tol > 0.0)) throw std::invalid_argument("PicardConfig: tol must be positive");
  if (max_iter < 1) throw std::invalid_argument("PicardConfig: max_iter must be >= 1");
  if (n < 2) throw std::invalid_argument("PicardConfig: n must be >= 2");
  if (!(q > 1.0) || !(r > 1.0) || r >= n + 1.0) throw std::invalid_argument("PicardConfig: bad exponents");
}

Schedule radius_schedule(double rho, double gamma, const ExponentProfile& profile, double constant,
                         double floor) {
  if (!(rho > 0.0)) throw std::invalid_argument("radius_schedule: rho must be positive");
  if (!(constant > 0.0)) throw std::invalid_argument("radius_schedule: constant must be positive");
  const int n = profile.n;
  const int M = profile.M;
  const double theta = profile.theta_bilinear.value_or(profile.theta.value_or(1.0));
  const double zeta = profile.zeta.value_or(kFallbackZeta);
  const double eta = profile.eta.value_or(kFallbackEta);
  const OpenInterval window = gamma_interval(n, M, theta, zeta, eta);
  if (!window.contains(gamma)) {
    std::ostringstream msg;
    msg << "radius_schedule: gamma = " << gamma << " outside (" << window.lo << ", " << window.hi << ")";
    throw std::domain_error(msg.str());
  }

  const double np1 = n + 1.0;
  Schedule out;
  out.constant = constant;
  out.exponents = {gamma - gamma * M / np1, 2.0 - gamma * theta / np1, 2.0 - gamma * zeta / np1,
                   2.0 - gamma * (M + eta) / np1};
  const std::array<double, 3> second_exp{1.0 - gamma * theta / np1, 1.0 - gamma * zeta / np1,
                                         1.0 - gamma * (M + eta) / np1};
  for (;;) {
    double a = 0.0;
    for (double e : out.exponents) a += std::pow(rho, e);
    double b = 0.0;
    for (double e : second_exp) b += std::pow(rho, e);
    out.first = constant * a / rho;
    out.second = constant * b;
    if (out.holds()) break;
    rho *= 0.5;
    ++out.halvings;
    if (rho < floor) throw std::runtime_error("radius_schedule: floor reached before smallness holds");
  }
  PicardConfig& cfg = out.config;
  cfg.rho = rho;
  cfg.gamma = gamma;
  cfg.lambda = std::pow(rho, gamma);
  cfg.epsilon = cfg.lambda;
  cfg.n = n;
  cfg.q = profile.q;
  cfg.r = profile.r;
  cfg.schedule_active = true;
  return out;
}

double steady_driver_norm(const SpectralField& u, const PicardConfig& cfg) {
  // At lambda = 0 the weighted L^s term drops out.
  if (cfg.lambda == 0.0) return sobolev_seminorm(u, 2, cfg.q) + sobolev_seminorm(u, 1, cfg.r);
  return lambda_norm(u, cfg.lambda, cfg.q, cfg.r, cfg.n);
}

double timeperiodic_driver_norm(const TimePeriodicField& u, const PicardConfig& cfg) {
  const double steady = steady_driver_norm(u.mode(0), cfg);
  if (u.max_mode() == 0) return steady;
  return steady + maxreg_norm(project_oscillatory(u), cfg.q);
}

SpectralPair picard_map(const SpectralField& f, const SpectralField& u, const LiftingField& lift,
                        double lambda) {
  require_same_grid(f.grid(), u.grid(), "picard_map");
  return apply_oseen_symbol(f + nonlinearity(u, lift, lambda), lambda, 0.0);
}

TimePeriodicPair picard_map(const TimePeriodicField& f, const TimePeriodicField& u,
                            const LiftingField& lift, double lambda) {
  require_same_grid(f.grid(), u.grid(), "picard_map");
  if (f.max_mode() != u.max_mode() || f.period() != u.period()) {
    throw std::invalid_argument("picard_map: time discretizations differ");
  }
  const TimePeriodicField rhs = f + nonlinearity(u, lift, lambda);
  TimePeriodicPair out{TimePeriodicField(f.grid(), f.grid().dim, f.period(), f.max_mode()),
                       TimePeriodicField(f.grid(), 1, f.period(), f.max_mode())};
  for (int k = -f.max_mode(); k <= f.max_mode(); ++k) {
    SpectralPair m = apply_oseen_symbol(rhs.mode(k), lambda, rhs.omega(k));
    out.velocity.mode(k) = std::move(m.velocity);
    out.pressure.mode(k) = std::move(m.pressure);
  }
  return out;
}

namespace {

// Shared iteration over either field type. Pair::velocity has type Field.
template <class Field, class Pair>
struct Loop {
  std::function<Pair(const Field&)> map;
  std::function<double(const Field&)> norm;

  Pair run(Field u, const PicardConfig& cfg, SolveReport& rep) const {
    Pair pair;
    double prev_update = -1.0;
    int growing = 0;
    rep.iterate_norms.push_back(norm(u));
    check_ball(rep.iterate_norms.back(), cfg, rep);
    for (int m = 0; m < cfg.max_iter; ++m) {
      pair = map(u);
      const double update = norm(pair.velocity - u);
      const double size = norm(pair.velocity);
      rep.iterates.push_back(update);
      rep.iterate_norms.push_back(size);
      check_ball(size, cfg, rep);
      if (rep.iterates.size() >= 2 && prev_update > 0.0) {
        rep.contraction_rate = std::max(rep.contraction_rate, update / prev_update);
        ++rep.measured_ratios;
      }
      if (prev_update > 0.0 && update >= prev_update) {
        if (++growing >= 3) fail("picard: diverging (three consecutive update ratios >= 1)", rep);
      } else {
        growing = 0;
      }
      prev_update = update;
      u = pair.velocity;
      if (update <= cfg.tol * size || update == 0.0) {
        rep.converged = true;
        return pair;
      }
    }
    fail("picard: max_iter reached", rep);
    return pair;
  }

  static void check_ball(double size, const PicardConfig& cfg, SolveReport& rep) {
    rep.max_norm = std::max(rep.max_norm, size);
    if (size > cfg.rho) {
      rep.stayed_in_ball = false;
      if (cfg.enforce_ball) fail("picard: iterate left A_rho", rep);
    }
  }

  [[noreturn]] static void fail(const std::string& what, SolveReport& rep) {
    rep.failure = what;
    throw PicardError(what, rep);
  }
};

void check_data(double size, const PicardConfig& cfg) {
  if (cfg.enforce_data && size > cfg.epsilon * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "picard: data size " << size << " exceeds epsilon = " << cfg.epsilon;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

SteadySolution picard_steady(const SpectralField& f, const PicardConfig& cfg, const LiftingField& lift,
                             const SpectralField* initial) {
  cfg.validate();
  require_same_grid(f.grid(), lift.coefficients.grid(), "picard_steady");
  SteadySolution out;
  SolveReport& rep = out.report;
  rep.data_size = lq_norm(f, cfg.q) + negative_norm_surrogate(f, cfg.r).value;
  check_data(rep.data_size, cfg);

  Loop<SpectralField, SpectralPair> loop;
  loop.map = [&](const SpectralField& u) { return picard_map(f, u, lift, cfg.lambda); };
  loop.norm = [&](const SpectralField& u) { return steady_driver_norm(u, cfg); };

  SpectralField u0 = initial ? *initial
                             : picard_map(f, SpectralField(f.grid(), f.grid().dim), lift, cfg.lambda).velocity;
  require_same_grid(u0.grid(), f.grid(), "picard_steady");
  out.pair = loop.run(std::move(u0), cfg, rep);

  // Certificate and residual from a fresh application of F.
  const SpectralField rhs = f + nonlinearity(out.pair.velocity, lift, cfg.lambda);
  const SpectralPair image = apply_oseen_symbol(rhs, cfg.lambda, 0.0);
  const double size = steady_driver_norm(out.pair.velocity, cfg);
  const double gap = steady_driver_norm(image.velocity - out.pair.velocity, cfg);
  rep.certificate = size > 0.0 ? gap / size : gap;
  out.pair.pressure = image.pressure;
  const Residual res = residual(out.pair, rhs, cfg.lambda);
  rep.final_residual = std::hypot(res.momentum, res.divergence);
  rep.relative_residual = rep.final_residual / (l2_norm_coefficients(f) + cfg.lambda);
  return out;
}

SteadySolution picard_steady(const VectorField& f, const PicardConfig& cfg, const LiftingField& lift,
                             const VectorField* initial) {
  if (initial) {
    const SpectralField u0 = to_spectral(*initial);
    return picard_steady(to_spectral(f), cfg, lift, &u0);
  }
  return picard_steady(to_spectral(f), cfg, lift, nullptr);
}

TimePeriodicSolution picard_timeperiodic(const TimePeriodicField& f, const PicardConfig& cfg,
                                         const LiftingField& lift, const TimePeriodicField* initial) {
  cfg.validate();
  require_same_grid(f.grid(), lift.coefficients.grid(), "picard_timeperiodic");
  TimePeriodicSolution out;
  SolveReport& rep = out.report;
  rep.data_size = bochner_lq(f, cfg.q) + negative_norm_surrogate(f.mode(0), cfg.r).value;
  check_data(rep.data_size, cfg);

  Loop<TimePeriodicField, TimePeriodicPair> loop;
  loop.map = [&](const TimePeriodicField& u) { return picard_map(f, u, lift, cfg.lambda); };
  loop.norm = [&](const TimePeriodicField& u) { return timeperiodic_driver_norm(u, cfg); };

  const TimePeriodicField zero(f.grid(), f.grid().dim, f.period(), f.max_mode());
  TimePeriodicField u0 = initial ? *initial : picard_map(f, zero, lift, cfg.lambda).velocity;
  out.pair = loop.run(std::move(u0), cfg, rep);

  const TimePeriodicField rhs = f + nonlinearity(out.pair.velocity, lift, cfg.lambda);
  const TimePeriodicPair image = picard_map(f, out.pair.velocity, lift, cfg.lambda);
  const double size = timeperiodic_driver_norm(out.pair.velocity, cfg);
  const double gap = timeperiodic_driver_norm(image.velocity - out.pair.velocity, cfg);
  rep.certificate = size > 0.0 ? gap / size : gap;
  out.pair.pressure = image.pressure;
  const Residual res = residual(out.pair, rhs, cfg.lambda);
  rep.final_residual = std::hypot(res.momentum, res.divergence);
  double fsize = 0.0;
  for (int k = -f.max_mode(); k <= f.max_mode(); ++k) {
    const double a = l2_norm_coefficients(f.mode(k));
    fsize += a * a;
  }
  rep.relative_residual = rep.final_residual / (std::sqrt(fsize) + cfg.lambda);
  return out;
}

double lipschitz_probe(const SpectralField& f, const SpectralField& center, const LiftingField& lift,
                       const PicardConfig& cfg, const std::vector<SpectralField>& directions, double radius) {
  double worst = 0.0;
  for (const SpectralField& d : directions) {
    const double size = steady_driver_norm(d, cfg);
    if (size == 0.0) continue;
    const SpectralField step = Complex(radius / size, 0.0) * d;
    const SpectralField a = picard_map(f, center + step, lift, cfg.lambda).velocity;
    const SpectralField b = picard_map(f, center - step, lift, cfg.lambda).velocity;
    worst = std::max(worst, steady_driver_norm(a - b, cfg) / (2.0 * radius));
  }
  return worst;
}

double lipschitz_probe(const TimePeriodicField& f, const TimePeriodicField& center, const LiftingField& lift,
                       const PicardConfig& cfg, const std::vector<TimePeriodicField>& directions, double radius) {
  double worst = 0.0;
  for (const TimePeriodicField& d : directions) {
    const double size = timeperiodic_driver_norm(d, cfg);
    if (size == 0.0) continue;
    TimePeriodicField step = d;
    step *= radius / size;
    const TimePeriodicField a = picard_map(f, center + step, lift, cfg.lambda).velocity;
    const TimePeriodicField b = picard_map(f, center - step, lift, cfg.lambda).velocity;
    worst = std::max(worst, timeperiodic_driver_norm(a - b, cfg) / (2.0 * radius));
  }
  return worst;
}

void write_report_csv(const SolveReport& report, std::ostream& out) {
  CsvWriter w(out, {"iteration", "update", "norm"});
  for (std::size_t i = 0; i < report.iterates.size(); ++i) {
    const double row[] = {static_cast<double>(i + 1), report.iterates[i], report.iterate_norms[i + 1]};
    w.row(std::span<const double>(row));
  }
}

}  // namespace oseenlab
