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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "harness_detail.hpp"
#include "oseenlab/csv.hpp"
#include "oseenlab/exponents.hpp"
#include "oseenlab/norms.hpp"
#include "oseenlab/oseen.hpp"
#include "oseenlab/spectral.hpp"

namespace oseenlab {

namespace {

const std::vector<std::string> kSteadyColumns{
    "lambda",       "seminorm_1r",   "weighted_lq_s",  "lambda_negnorm_1r_d1u", "lr_pressure", "negnorm_1r_surrogate_f",
    "rhs_line1",    "Q_line1",       "seminorm_2q",    "lambda_lq_d1u",         "lq_grad_pressure", "lq_f",
    "rhs_line2",    "Q_line2",       "lq_s",           "full_norm",             "Q_full"};

// Every left- and right-hand norm of the two steady lines and the full-norm
// line for one lambda.
std::vector<double> steady_row(const SpectralField& f, const SpectralPair& sol, double lambda,
                               const ExperimentConfig& cfg, const ExponentProfile& prof) {
  const int n = cfg.n();
  const double q = cfg.q, r = cfg.r;
  const SpectralField& u = sol.velocity;
  const SpectralField d1u = spectral_derivative(u, 1);
  const double u1r = sobolev_seminorm(u, 1, r);
  const double us = lq_norm(u, prof.s);
  const double wus = std::pow(lambda, (1.0 + prof.delta) / (n + 1)) * us;
  const double negd1u = lambda * negative_norm_surrogate(d1u, r).value;
  const double pr = lq_norm(sol.pressure, r);
  const double negf = negative_norm_surrogate(f, r).value;
  const double rhs1 = std::pow(lambda, -double(prof.M) / (n + 1)) * negf;
  const double u2q = sobolev_seminorm(u, 2, q);
  const double d1uq = lambda * lq_norm(d1u, q);
  const double gpq = lq_norm(gradient(sol.pressure), q);
  const double fq = lq_norm(f, q);
  const double rhs2 = fq + rhs1;
  double full = 0.0;
  if (prof.theta) {
    const double th = (1.0 + prof.delta) * *prof.theta / (n + 1);
    full = std::pow(lambda, th) * lq_norm(u, q) + std::pow(lambda, th / 2) * sobolev_seminorm(u, 1, q) + u2q;
  }
  return {lambda, u1r, wus, negd1u, pr, negf, rhs1, (u1r + wus + negd1u + pr) / rhs1,
          u2q, d1uq, gpq, fq, rhs2, (u2q + d1uq + gpq) / rhs2, us, full, prof.theta ? full / rhs2 : 0.0};
}

std::string fmt(double v) { return format_double(v); }

void fit_column(ExperimentReport& rep, const std::string& col, const std::vector<double>& ls) {
  const LogLogFit fit = fit_loglog(ls, rep.column(col));
  rep.add("slope:" + col, fit.slope);
  rep.add("leverage:" + col, fit.leverage);
}

// Slope assertions shared by the steady sweep and the steady part of the
// time-periodic sweep.
void steady_assertions(ExperimentReport& rep, const ExperimentConfig& cfg, const ExponentProfile& prof) {
  const std::vector<double> ls = rep.column("lambda");
  if (ls.size() < 2) {
    rep.check("sweep", false, "fewer than two lambda points");
    return;
  }
  std::vector<std::string> fitted{"Q_line1", "Q_line2", "weighted_lq_s", "lq_s", "seminorm_1r", "seminorm_2q",
                                  "lr_pressure", "lq_grad_pressure"};
  if (prof.theta) fitted.push_back("Q_full");
  for (const auto& c : fitted) fit_column(rep, c, ls);

  const double smax = cfg.tolerance("slope_max");
  const double lev = cfg.tolerance("leverage");
  std::vector<std::string> qs{"Q_line1", "Q_line2"};
  if (prof.theta) qs.push_back("Q_full");
  for (const auto& c : qs) {
    const double s = rep.value("slope:" + c);
    rep.check("slope " + c, s <= smax, "slope " + fmt(s) + " <= " + fmt(smax));
    const double l = rep.value("leverage:" + c);
    rep.check("leverage " + c, l <= lev, "leverage " + fmt(l) + " <= " + fmt(lev));
    double cmax = 0.0;
    for (double v : rep.column(c)) cmax = std::max(cmax, v);
    rep.add("constant:" + c, cmax);
  }
  const double ws = rep.value("slope:weighted_lq_s");
  const double wmin = cfg.tolerance("weighted_slope_min");
  rep.check("weighted term slope", ws >= wmin, "slope " + fmt(ws) + " >= " + fmt(wmin));
  const double us = rep.value("slope:lq_s");
  const double ubound = -(1.0 + prof.delta) / (cfg.n() + 1);
  rep.check("lq_s slope above weight", us >= ubound, "slope " + fmt(us) + " >= " + fmt(ubound));
  const double span = ls.back() / ls.front();
  rep.add("lambda_span", span);
  rep.check("sweep span", ls.size() >= 5 && span >= 10.0 * (1 - 1e-12),
            std::to_string(ls.size()) + " points over a factor " + fmt(span));
}

ExponentProfile scaling_profile(const ExperimentConfig& cfg) { return make_profile(cfg.n(), cfg.q, cfg.r); }

}  // namespace

ScalingResult run_scaling_steady(const ExperimentConfig& cfg) {
  cfg.validate();
  cfg.check_wake();
  const ExponentProfile prof = scaling_profile(cfg);
  const GridSpec& g = cfg.grid;
  const SpectralField f = detail::bump_forcing(g, cfg.bump_width);
  const std::vector<double> ls = cfg.lambdas();

  ScalingResult rep;
  rep.name = to_string(cfg.experiment);
  rep.header = kSteadyColumns;
  rep.rows.resize(ls.size());
  SpectralField fg;
  if (cfg.gradient_amplitude != 0.0) {
    fg = f + Complex(cfg.gradient_amplitude) * gradient(random_scalar(g, 1, detail::field_band(cfg, g), cfg.seed, 0));
  }
  std::vector<double> grad_defect(ls.size(), 0.0);
  const double lmax = ls.empty() ? 1.0 : ls.back();

  detail::parallel_for(ls.size(), [&](std::size_t i) {
    const OseenParams params{ls[i], std::max(lmax, cfg.lambda0), g.dim};
    const SpectralPair sol = solve_steady(f, params);
    rep.rows[i] = steady_row(f, sol, ls[i], cfg, prof);
    if (cfg.gradient_amplitude != 0.0) {
      const SpectralPair solg = solve_steady(fg, params);
      grad_defect[i] = l2_norm_coefficients(solg.velocity - sol.velocity) / l2_norm_coefficients(sol.velocity);
    }
  });
  rep.add("M", prof.M);
  rep.add("delta", prof.delta);
  rep.add("s", prof.s);
  if (prof.theta) rep.add("theta", *prof.theta);
  rep.add("wake_gate", cfg.c_wake / g.half_period);
  steady_assertions(rep, cfg, prof);
  if (cfg.gradient_amplitude != 0.0) {
    const double worst = *std::max_element(grad_defect.begin(), grad_defect.end());
    rep.add("gradient_velocity_defect", worst);
    rep.check("gradient invariance", worst <= 1e-12, "relative velocity change " + fmt(worst) + " <= 1e-12");
  }
  return rep;
}

ScalingResult run_scaling_tp(const ExperimentConfig& cfg) {
  cfg.validate();
  cfg.check_wake();
  const ExponentProfile prof = scaling_profile(cfg);
  const GridSpec& g = cfg.grid;
  const int K = cfg.max_mode;
  const double T = cfg.period;
  const SpectralField f0 = detail::bump_forcing(g, cfg.bump_width);
  TimePeriodicField F = TimePeriodicField::constant(f0, T, K);
  if (K >= 1) {
    TimePeriodicField osc = random_oscillatory(g, 1, detail::field_band(cfg, g), T, K, cfg.seed, 1);
    osc *= l2_norm_coefficients(f0) / detail::plancherel_l2(osc);
    F += osc;
  }
  const TimePeriodicField Fperp = project_oscillatory(F);
  const double fperp_q = K >= 1 ? bochner_lq(Fperp, cfg.q) : 0.0;
  const bool skip = !(fperp_q > 0.0);
  const std::vector<double> ls = cfg.lambdas();

  ScalingResult rep;
  rep.name = to_string(cfg.experiment);
  rep.header = kSteadyColumns;
  for (const char* c : {"maxreg_w", "bochner_lq_grad_q", "bochner_lq_fperp", "Q_osc"}) rep.header.push_back(c);
  rep.rows.resize(ls.size());
  std::vector<double> planch(ls.size(), 0.0);
  const double lmax = ls.empty() ? 1.0 : ls.back();

  detail::parallel_for(ls.size(), [&](std::size_t i) {
    const OseenParams params{ls[i], std::max(lmax, cfg.lambda0), g.dim};
    const TimePeriodicPair sol = solve_timeperiodic(F, params);
    const SpectralPair steady{sol.velocity.mode(0), sol.pressure.mode(0)};
    std::vector<double> row = steady_row(f0, steady, ls[i], cfg, prof);
    double X = 0.0, gq = 0.0, ratio = 0.0;
    if (!skip) {
      const TimePeriodicField w = project_oscillatory(sol.velocity);
      const TimePeriodicField gpq = detail::gradient(project_oscillatory(sol.pressure));
      X = maxreg_norm(w, cfg.q);
      gq = bochner_lq(gpq, cfg.q);
      ratio = (X + gq) / fperp_q;
      if (cfg.q == 2.0) {
        const TimePeriodicField dw = detail::time_derivative(w);
        planch[i] = std::max({detail::rel_diff(bochner_lq(w, 2.0), detail::plancherel_l2(w)),
                              detail::rel_diff(bochner_lq(dw, 2.0), detail::plancherel_l2(dw)),
                              detail::rel_diff(bochner_lq(gpq, 2.0), detail::plancherel_l2(gpq)),
                              detail::rel_diff(fperp_q, detail::plancherel_l2(Fperp))});
      }
    }
    row.insert(row.end(), {X, gq, fperp_q, ratio});
    rep.rows[i] = std::move(row);
  });
  rep.add("M", prof.M);
  rep.add("delta", prof.delta);
  rep.add("s", prof.s);
  rep.add("period", T);
  rep.add("wake_gate", cfg.c_wake / g.half_period);
  steady_assertions(rep, cfg, prof);
  rep.add("oscillatory_skipped", skip ? 1.0 : 0.0);
  if (!skip && ls.size() >= 2) {
    const LogLogFit fit = fit_loglog(ls, rep.column("Q_osc"));
    rep.add("slope:Q_osc", fit.slope);
    rep.add("leverage:Q_osc", fit.leverage);
    const double band = cfg.tolerance("osc_slope");
    rep.check("slope Q_osc", std::abs(fit.slope) <= band, "|slope| " + fmt(std::abs(fit.slope)) + " <= " + fmt(band));
    double cmax = 0.0;
    for (double v : rep.column("Q_osc")) cmax = std::max(cmax, v);
    rep.add("constant:Q_osc", cmax);
  }
  if (!skip && cfg.q == 2.0) {
    const double worst = ls.empty() ? 0.0 : *std::max_element(planch.begin(), planch.end());
    rep.add("plancherel_defect", worst);
    const double tol = cfg.tolerance("plancherel");
    rep.check("plancherel cross-check", worst <= tol, "relative gap " + fmt(worst) + " <= " + fmt(tol));
  }
  return rep;
}

}  // namespace oseenlab
