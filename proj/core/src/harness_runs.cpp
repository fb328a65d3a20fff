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
#include "oseenlab/nonlinear.hpp"
#include "oseenlab/norms.hpp"
#include "oseenlab/oseen.hpp"
#include "oseenlab/picard.hpp"
#include "oseenlab/spectral.hpp"

namespace oseenlab {

namespace {

std::string fmt(double v) { return format_double(v); }

double rel_l2(const SpectralField& a, const SpectralField& b) {
  return l2_norm_coefficients(a - b) / l2_norm_coefficients(b);
}

double rel_l2(const TimePeriodicField& a, const TimePeriodicField& b) {
  return detail::plancherel_l2(a - b) / detail::plancherel_l2(b);
}

// -Laplace u + lambda d_1 u + grad p.
SpectralField oseen_operator(const SpectralField& u, const SpectralField& p, double lambda) {
  SpectralField f = laplacian(u);
  f *= Complex(-1.0);
  SpectralField d1 = spectral_derivative(u, 1);
  d1 *= Complex(lambda);
  return f + d1 + gradient(p);
}

TimePeriodicField oseen_operator(const TimePeriodicField& u, const TimePeriodicField& p, double lambda) {
  TimePeriodicField f = detail::time_derivative(u);
  for (int k = -u.max_mode(); k <= u.max_mode(); ++k) f.mode(k) += oseen_operator(u.mode(k), p.mode(k), lambda);
  return f;
}

struct Manufactured {
  TimePeriodicField u;
  TimePeriodicField p;
};

// Random divergence-free velocity and zero-mean pressure with time modes |k| <= K.
Manufactured manufactured(const ExperimentConfig& cfg, int K, double amplitude) {
  const GridSpec& g = cfg.grid;
  const int band = detail::field_band(cfg, g);
  Manufactured m{TimePeriodicField::constant(random_solenoidal(g, 1, band, cfg.seed, 0), cfg.period, K),
                 TimePeriodicField::constant(random_scalar(g, 1, band, cfg.seed, 1), cfg.period, K)};
  if (K >= 1) {
    m.u += random_oscillatory(g, 1, band, cfg.period, K, cfg.seed, 2);
    for (int k = 1; k <= K; ++k) {
      const SpectralField s = random_scalar(g, 1, band, cfg.seed, 2 + static_cast<std::uint64_t>(k));
      const Complex c(std::cos(0.7 * k), std::sin(0.7 * k));
      m.p.mode(k) = c * s;
      m.p.mode(-k) = std::conj(c) * s;
    }
  }
  m.u *= amplitude;
  m.p *= amplitude;
  return m;
}

PicardConfig mms_picard(const ExperimentConfig& cfg, double lambda) {
  PicardConfig pc;
  pc.lambda = lambda;
  pc.epsilon = 1.0;
  pc.rho = 1.0;
  pc.tol = cfg.picard_tol;
  pc.max_iter = cfg.picard_max_iter;
  pc.n = cfg.n();
  pc.q = cfg.q;
  pc.r = cfg.r;
  pc.enforce_ball = false;
  pc.enforce_data = false;
  return pc;
}

}  // namespace

ExperimentReport run_mms(const ExperimentConfig& cfg) {
  cfg.validate();
  const GridSpec& g = cfg.grid;
  const int K = std::max(1, cfg.max_mode);
  const std::vector<double> ls = cfg.lambdas();
  const double lmax = std::max(cfg.lambda0, ls.empty() ? 1.0 : ls.back());
  ExperimentReport rep;
  rep.name = to_string(cfg.experiment);
  rep.header = {"case", "lambda", "rel_l2_velocity", "rel_l2_pressure", "iterations", "tolerance"};
  const double tol_lin = cfg.tolerance("mms_linear");
  const double tol_nl = cfg.tolerance("mms_nonlinear");
  static const char* kCases[] = {"linear steady", "linear time-periodic", "nonlinear steady",
                                 "nonlinear time-periodic"};
  rep.rows.resize(4 * ls.size());

  detail::parallel_for(4 * ls.size(), [&](std::size_t idx) {
    const double lambda = ls[idx / 4];
    const int c = static_cast<int>(idx % 4);
    const OseenParams params{lambda, lmax, g.dim};
    double eu = 0.0, ep = 0.0, iters = 0.0;
    double tol = tol_lin;
    if (c == 0) {
      const Manufactured m = manufactured(cfg, 0, 1.0);
      const SpectralPair sol = solve_steady(oseen_operator(m.u.mode(0), m.p.mode(0), lambda), params);
      eu = rel_l2(sol.velocity, m.u.mode(0));
      ep = rel_l2(sol.pressure, m.p.mode(0));
    } else if (c == 1) {
      const Manufactured m = manufactured(cfg, K, 1.0);
      const TimePeriodicPair sol = solve_timeperiodic(oseen_operator(m.u, m.p, lambda), params);
      eu = rel_l2(sol.velocity, m.u);
      ep = rel_l2(sol.pressure, m.p);
    } else {
      tol = tol_nl;
      const LiftingField lift = build_lifting(lambda, cfg.cutoff, g);
      const PicardConfig pc = mms_picard(cfg, lambda);
      if (c == 2) {
        const Manufactured m = manufactured(cfg, 0, cfg.amplitude);
        const SpectralField& us = m.u.mode(0);
        const SpectralField f = oseen_operator(us, m.p.mode(0), lambda) - nonlinearity(us, lift, lambda);
        const SteadySolution sol = picard_steady(f, pc, lift);
        eu = rel_l2(sol.pair.velocity, us);
        ep = rel_l2(sol.pair.pressure, m.p.mode(0));
        iters = static_cast<double>(sol.report.iterates.size());
      } else {
        const Manufactured m = manufactured(cfg, K, cfg.amplitude);
        const TimePeriodicField f = oseen_operator(m.u, m.p, lambda) - nonlinearity(m.u, lift, lambda);
        const TimePeriodicSolution sol = picard_timeperiodic(f, pc, lift);
        eu = rel_l2(sol.pair.velocity, m.u);
        ep = rel_l2(sol.pair.pressure, m.p);
        iters = static_cast<double>(sol.report.iterates.size());
      }
    }
    rep.rows[idx] = {double(c), lambda, eu, ep, iters, tol};
  });
  for (const auto& row : rep.rows) {
    const double err = std::max(row[2], row[3]);
    rep.check(std::string(kCases[static_cast<int>(row[0])]) + " lambda=" + fmt(row[1]), err <= row[5],
              "relative L2 error " + fmt(err) + " <= " + fmt(row[5]));
  }
  return rep;
}

ExperimentReport run_lifting_check(const ExperimentConfig& cfg) {
  cfg.validate();
  const GridSpec& g = cfg.grid;
  const std::vector<double> ls = cfg.lambdas();
  ExperimentReport rep;
  rep.name = to_string(cfg.experiment);
  rep.header = {"lambda", "max_div", "max_ball_error", "lq_load", "negnorm_1r_surrogate_load", "load_ratio"};
  rep.rows.resize(ls.size());
  const auto center = cfg.cutoff.center_on(g);

  detail::parallel_for(ls.size(), [&](std::size_t i) {
    const double lambda = ls[i];
    const LiftingField lift = build_lifting(lambda, cfg.cutoff, g);
    const ScalarField div = scalar_from_spectral(divergence(lift.coefficients));
    double dmax = 0.0;
    for (double v : div.values()) dmax = std::max(dmax, std::abs(v));
    double bmax = 0.0;
    for_each_point(g, [&](std::size_t p, const std::array<double, 3>& x) {
      double r2 = 0.0;
      for (int a = 0; a < g.dim; ++a) r2 += (x[a] - center[a]) * (x[a] - center[a]);
      if (r2 > cfg.cutoff.inner_radius * cfg.cutoff.inner_radius) return;
      for (int a = 0; a < g.dim; ++a) {
        const double target = a == 0 ? -lambda : 0.0;
        bmax = std::max(bmax, std::abs(lift.V.component(a)[p] - target));
      }
    });
    const LiftingLoad load = lifting_load(lift, lambda, cfg.q, cfg.r);
    rep.rows[i] = {lambda, dmax, bmax, load.lq, load.negative, load.ratio};
  });
  if (ls.empty()) return rep;
  const double dtol = cfg.tolerance("lifting_div");
  const double btol = cfg.tolerance("lifting_ball");
  const auto dcol = rep.column("max_div");
  const auto bcol = rep.column("max_ball_error");
  const auto rcol = rep.column("load_ratio");
  const double dmax = *std::max_element(dcol.begin(), dcol.end());
  const double bmax = *std::max_element(bcol.begin(), bcol.end());
  const auto [rmin, rmax] = std::minmax_element(rcol.begin(), rcol.end());
  // Half-width of the band about its midpoint.
  const double spread = (*rmax - *rmin) / (*rmax + *rmin);
  rep.add("max_div", dmax);
  rep.add("max_ball_error", bmax);
  rep.add("load_ratio_spread", spread);
  rep.add("load_ratio_max_over_min", *rmax / *rmin);
  rep.check("div V = 0", dmax <= dtol, "max |div V| " + fmt(dmax) + " <= " + fmt(dtol));
  rep.check("V = -lambda e1 on B_R", bmax <= btol, "max |V + lambda e1| " + fmt(bmax) + " <= " + fmt(btol));
  const double band = cfg.tolerance("lifting_band");
  rep.check("load ratio constant", spread <= band, "(max - min)/(max + min) = " + fmt(spread) + " <= " + fmt(band));
  return rep;
}

// ---------------------------------------------------------------- bilinear

namespace {

const char* kEstimates[6] = {"steady_strong", "steady_weak", "periodic_strong", "periodic_weak", "mixed_1", "mixed_2"};

std::vector<detail::BilinearSample> draw_ensemble(const ExperimentConfig& cfg, const GridSpec& grid, int count) {
  std::vector<detail::BilinearSample> out(static_cast<std::size_t>(count));
  const int band = detail::field_band(cfg, cfg.grid);
  const int K = std::max(1, cfg.max_mode);
  detail::parallel_for(count, [&](int i) {
    out[static_cast<std::size_t>(i)] = detail::bilinear_sample(grid, band, cfg.period, K, cfg.q, cfg.r, cfg.seed, i);
  });
  return out;
}

std::vector<double> log_window(double lo, double hi, int points) {
  points = std::max(points, 5);
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) out[i] = lo * std::pow(hi / lo, double(i) / (points - 1));
  return out;
}

// One decade starting where lambda^{1/(n+1)} ||v||_s >= dominance (|v|_{2,q} + |v|_{1,r})
// for every field of the ensemble.
std::vector<double> dominated_window(const ExperimentConfig& cfg, const std::vector<detail::BilinearSample>& ens) {
  double worst = 0.0;
  for (const auto& b : ens) worst = std::max({worst, b.A1 / b.B1, b.A2 / b.B2});
  const double lo = std::pow(cfg.dominance * worst, cfg.n() + 1);
  return log_window(lo, 10.0 * lo, cfg.lambda_points);
}

}  // namespace

ExperimentReport run_bilinear_ensemble(const ExperimentConfig& cfg) {
  cfg.validate();
  const int n = cfg.n();
  const Admissibility adm = admissibility(n, cfg.q, cfg.r, Problem::TimePeriodicNS);
  ExperimentReport rep;
  rep.name = to_string(cfg.experiment);
  rep.header = {"estimate", "n", "q", "r", "lambda", "ratio", "constant"};
  if (!adm.ok) {
    std::string why;
    for (const auto& v : adm.violated) why += (why.empty() ? "" : "; ") + v;
    rep.check("admissible configuration", false, why);
    return rep;
  }
  const auto samples = draw_ensemble(cfg, cfg.grid, cfg.samples);
  std::vector<double> ls = cfg.lambdas();
  if (ls.empty()) ls = dominated_window(cfg, samples);
  const detail::BilinearFit all = detail::fit_bilinear(samples, samples.size(), ls, n);
  for (int j = 0; j < 6; ++j) {
    for (std::size_t l = 0; l < ls.size(); ++l) {
      rep.rows.push_back({double(j + 1), double(n), cfg.q, cfg.r, ls[l], all.sup[j][l], all.constant[j]});
    }
  }
  const double theta = all.exponent[0], eta = all.exponent[1];
  const double zeta = std::max(all.exponent[4], all.exponent[5]);
  rep.add("theta", theta);
  rep.add("eta", eta);
  rep.add("zeta", zeta);
  rep.add("weighted_crossover_lambda", all.crossover);
  rep.add("window_lo", ls.front());
  rep.add("window_hi", ls.back());
  {
    const double gate = cfg.c_wake / cfg.grid.half_period;
    const auto ref = detail::fit_bilinear(samples, samples.size(), log_window(gate, 10 * gate, cfg.lambda_points), n);
    rep.add("theta_wake_window", ref.exponent[0]);
    rep.add("eta_wake_window", ref.exponent[1]);
    rep.add("zeta_wake_window", std::max(ref.exponent[4], ref.exponent[5]));
  }
  for (int j = 0; j < 6; ++j) rep.add(std::string("constant:") + kEstimates[j], all.constant[j]);

  rep.check("theta in [0, 2]", theta >= 0.0 && theta <= 2.0, "theta = " + fmt(theta));
  rep.check("eta in [0, 2]", eta >= 0.0 && eta <= 2.0, "eta = " + fmt(eta));
  rep.check("zeta in [0, 1)", zeta >= 0.0 && zeta < 1.0, "zeta = " + fmt(zeta));
  if (std::abs(cfg.r - (n + 1) / 2.0) < 1e-12) {
    const double band = cfg.tolerance("eta_band");
    rep.check("eta near 2 at r = (n+1)/2", std::abs(eta - 2.0) <= band, "|eta - 2| = " + fmt(std::abs(eta - 2.0)));
  }
  for (int j = 0; j < 6; ++j) {
    rep.check(std::string("finite constant ") + kEstimates[j], std::isfinite(all.constant[j]) && all.constant[j] > 0,
              fmt(all.constant[j]));
  }

  const double stab = cfg.tolerance("stability");
  if (samples.size() >= 2) {
    const auto half = detail::fit_bilinear(samples, samples.size() / 2, ls, n);
    double worst = 0.0;
    for (int j = 0; j < 6; ++j) worst = std::max(worst, std::abs(half.constant[j] / all.constant[j] - 1.0));
    rep.add("sample_doubling_change", worst);
    rep.check("constants stable under sample doubling", worst <= stab, "max change " + fmt(worst));
  }
  if (cfg.refine_points > 0) {
    GridSpec fine = cfg.grid;
    fine.points = cfg.refine_points;
    const auto fs = draw_ensemble(cfg, fine, cfg.samples);
    const auto ff = detail::fit_bilinear(fs, fs.size(), ls, n);
    double worst = 0.0;
    for (int j = 0; j < 6; ++j) worst = std::max(worst, std::abs(ff.constant[j] / all.constant[j] - 1.0));
    rep.add("refinement_change", worst);
    rep.check("constants stable under grid refinement", worst <= stab, "max change " + fmt(worst));
  }
  return rep;
}

// ---------------------------------------------------------------- Picard

namespace {

struct PicardSetup {
  ExponentProfile profile;
  double c_lin = 0, c_osc = 0, c_bil = 0, c_lift = 0, constant = 0;
  double lift_load = 0, lift_norm = 0;
  Schedule schedule;
  double gamma = 0;
  bool found = false;
  std::string failure;
};

SpectralField random_forcing(const ExperimentConfig& cfg, std::uint64_t stream) {
  const GridSpec& g = cfg.grid;
  const int band = detail::field_band(cfg, g);
  return random_solenoidal(g, 1, band, cfg.seed, stream) +
         gradient(random_scalar(g, 1, band, cfg.seed, stream + 1));
}

// Constant of the smallness conditions from the linear solver, the bilinear
// ensemble and the lifting, with eta and zeta at their fallback values.
PicardSetup picard_setup(const ExperimentConfig& cfg, bool periodic) {
  const int n = cfg.n();
  const GridSpec& g = cfg.grid;
  const std::vector<double> ls = cfg.lambdas();
  const int M = exponents_mdelta(n, cfg.r).M;
  PicardSetup s;
  std::vector<double> lin(static_cast<std::size_t>(cfg.samples) * ls.size(), 0.0);
  std::vector<double> osc(lin.size(), 0.0);
  const int K = std::max(1, cfg.max_mode);

  detail::parallel_for(lin.size(), [&](std::size_t idx) {
    const double lambda = ls[idx % ls.size()];
    const auto i = static_cast<std::uint64_t>(idx / ls.size());
    const SpectralField f = random_forcing(cfg, 1000 + 2 * i);
    const SpectralPair sol = solve_steady(f, OseenParams{lambda, std::max(1.0, ls.back()), n});
    const double rhs = lq_norm(f, cfg.q) + std::pow(lambda, -double(M) / (n + 1)) *
                                               negative_norm_surrogate(f, cfg.r).value;
    lin[idx] = lambda_norm(sol.velocity, lambda, cfg.q, cfg.r, n) / rhs;
    if (periodic) {
      const TimePeriodicField F = random_oscillatory(g, 1, detail::field_band(cfg, g), cfg.period, K, cfg.seed, 3000 + i);
      const TimePeriodicPair tp = solve_timeperiodic(F, OseenParams{lambda, std::max(1.0, ls.back()), n});
      osc[idx] = maxreg_norm(tp.velocity, cfg.q) / bochner_lq(F, cfg.q);
    }
  });
  s.c_lin = *std::max_element(lin.begin(), lin.end());
  s.c_osc = periodic ? *std::max_element(osc.begin(), osc.end()) : 0.0;

  const auto ens = draw_ensemble(cfg, g, cfg.samples);
  const auto probe = detail::fit_bilinear(ens, ens.size(), ls, n);
  const double theta = std::clamp(probe.exponent[0], 0.0, 2.0);
  const std::array<double, 6> used{theta, kFallbackEta, 0.0, 0.0, kFallbackZeta, kFallbackZeta};
  for (int j = 0; j < 6; ++j) {
    for (std::size_t l = 0; l < ls.size(); ++l) {
      s.c_bil = std::max(s.c_bil, probe.sup[j][l] * std::pow(ls[l], used[j] / (n + 1)));
    }
  }

  const LiftingField unit = build_lifting(1.0, cfg.cutoff, g);
  s.lift_load = lifting_load(unit, 1.0, cfg.q, cfg.r).ratio;
  s.lift_norm = lambda_norm(unit.coefficients, 1.0, cfg.q, cfg.r, n);
  s.c_lift = std::max(s.lift_load, s.lift_norm);

  s.profile = make_profile(n, cfg.q, cfg.r, theta, kFallbackEta, kFallbackZeta);
  s.constant = std::max(s.c_lin, s.c_osc) * std::max({1.0, s.c_bil, s.c_lift});
  const OpenInterval gi = *s.profile.gamma;
  std::vector<double> gammas;
  if (cfg.gamma > 0.0) {
    gammas.push_back(cfg.gamma);
  } else {
    for (int i = 1; i < 64; ++i) gammas.push_back(gi.lo + (gi.hi - gi.lo) * i / 64.0);
  }
  // Without an explicit gamma, the one that keeps the largest radius.
  for (double gamma : gammas) {
    try {
      Schedule sch = radius_schedule(cfg.rho, gamma, s.profile, s.constant);
      if (!s.found || sch.config.rho > s.schedule.config.rho) {
        s.schedule = sch;
        s.gamma = gamma;
        s.found = true;
      }
    } catch (const std::runtime_error& e) {
      s.failure = e.what();
    }
  }
  if (!s.found) s.gamma = gammas.front();
  return s;
}

void setup_summary(ExperimentReport& rep, const PicardSetup& s) {
  rep.add("C_linear", s.c_lin);
  rep.add("C_oscillatory", s.c_osc);
  rep.add("C_bilinear", s.c_bil);
  rep.add("C_lifting", s.c_lift);
  rep.add("lifting_load_ratio", s.lift_load);
  rep.add("lifting_norm_unit", s.lift_norm);
  rep.add("C", s.constant);
  rep.add("theta_bilinear", *s.profile.theta_bilinear);
  rep.add("gamma", s.gamma);
  rep.add("rho", s.schedule.config.rho);
  rep.add("lambda", s.schedule.config.lambda);
  rep.add("epsilon", s.schedule.config.epsilon);
  rep.add("halvings", s.schedule.halvings);
  rep.add("smallness_first", s.schedule.first);
  rep.add("smallness_second", s.schedule.second);
}

PicardConfig run_config(const ExperimentConfig& cfg, const PicardSetup& s) {
  PicardConfig pc = s.schedule.config;
  pc.tol = cfg.picard_tol;
  pc.max_iter = cfg.picard_max_iter;
  return pc;
}

void solve_assertions(ExperimentReport& rep, const ExperimentConfig& cfg, const SolveReport& r, double agreement,
                      double lipschitz) {
  rep.add("iterations", static_cast<double>(r.iterates.size()));
  rep.add("contraction_rate", r.contraction_rate);
  rep.add("measured_ratios", r.measured_ratios);
  rep.add("lipschitz_probe", lipschitz);
  rep.add("certificate", r.certificate);
  rep.add("data_size", r.data_size);
  rep.add("initial_iterate_gap", agreement);
  rep.add("relative_residual", r.relative_residual);
  for (std::size_t i = 0; i < r.iterates.size(); ++i) {
    rep.rows.push_back({double(i + 1), r.iterates[i], r.iterate_norms[i]});
  }
  const double rate_max = cfg.tolerance("picard_rate");
  const double cert = cfg.tolerance("certificate") * cfg.picard_tol;
  const double uniq = cfg.tolerance("uniqueness") * cfg.picard_tol;
  rep.check("converged", r.converged, r.failure.empty() ? "ok" : r.failure);
  // With a single update there is no ratio; the map's Lipschitz constant on A_rho stands in.
  const bool from_iterates = r.measured_ratios > 0;
  const double rate = from_iterates ? r.contraction_rate : lipschitz;
  rep.check("contraction rate", rate < rate_max,
            "rate " + fmt(rate) + " < " + fmt(rate_max) +
                (from_iterates ? " over " + std::to_string(r.measured_ratios) + " update ratios"
                               : " (Lipschitz probe on A_rho)"));
  rep.check("fixed-point certificate", r.certificate <= cert, fmt(r.certificate) + " <= " + fmt(cert));
  rep.check("initial iterates agree", agreement <= uniq, fmt(agreement) + " <= " + fmt(uniq));
  const double res = cfg.tolerance("residual");
  rep.check("momentum residual", r.relative_residual <= res, fmt(r.relative_residual) + " <= " + fmt(res));
}

// Data sizes above the schedule, reported only: how far the iteration still
// contracts without the smallness guarantee.
const std::vector<double> kExploreSizes{1e-8, 1e-6, 1e-4, 1e-2};

template <class Solve>
void explore(ExperimentReport& rep, const ExperimentConfig& cfg, Solve&& solve) {
  for (double eps : kExploreSizes) {
    PicardConfig pc;
    pc.rho = 1.0;
    pc.lambda = eps;
    pc.epsilon = eps;
    pc.tol = cfg.picard_tol;
    pc.max_iter = cfg.picard_max_iter;
    pc.n = cfg.n();
    pc.q = cfg.q;
    pc.r = cfg.r;
    pc.enforce_ball = false;
    pc.enforce_data = false;
    SolveReport r;
    try {
      r = solve(pc);
    } catch (const PicardError& e) {
      r = e.report();
    }
    const std::string key = "explore:" + fmt(eps) + ":";
    rep.add(key + "iterations", static_cast<double>(r.iterates.size()));
    rep.add(key + "rate", r.contraction_rate);
    rep.add(key + "converged", r.converged ? 1.0 : 0.0);
  }
}

ExperimentReport picard_header(const ExperimentConfig& cfg, const PicardSetup& s) {
  ExperimentReport rep;
  rep.name = to_string(cfg.experiment);
  rep.header = {"iteration", "update", "norm"};
  setup_summary(rep, s);
  if (s.found) {
    rep.check("radius schedule", s.schedule.holds(),
              "smallness conditions after " + std::to_string(s.schedule.halvings) + " halvings");
  } else {
    rep.check("radius schedule", false, s.failure);
  }
  return rep;
}

}  // namespace

ExperimentReport run_picard_steady(const ExperimentConfig& cfg) {
  cfg.validate();
  const PicardSetup s = picard_setup(cfg, false);
  ExperimentReport rep = picard_header(cfg, s);
  if (!s.found) return rep;

  const PicardConfig pc = run_config(cfg, s);
  const GridSpec& g = cfg.grid;
  const SpectralField shape = random_forcing(cfg, 10);
  const double shape_size = lq_norm(shape, cfg.q) + negative_norm_surrogate(shape, cfg.r).value;
  const auto data = [&](double eps) { return Complex(eps / shape_size * (1.0 - 1e-9)) * shape; };
  const SpectralField f = data(pc.epsilon);
  const LiftingField lift = build_lifting(pc.lambda, cfg.cutoff, g);
  try {
    const SteadySolution a = picard_steady(f, pc, lift);
    const SpectralField zero(g, g.dim);
    const SteadySolution b = picard_steady(f, pc, lift, &zero);
    const SpectralField sf = solve_steady(f, OseenParams{pc.lambda, std::max(1.0, pc.lambda), g.dim}).velocity;
    const SteadySolution c = picard_steady(f, pc, lift, &sf);
    const double un = steady_driver_norm(a.pair.velocity, pc);
    const double gap = std::max(steady_driver_norm(b.pair.velocity - a.pair.velocity, pc),
                                steady_driver_norm(c.pair.velocity - a.pair.velocity, pc)) / un;
    std::vector<SpectralField> dirs;
    for (int i = 0; i < 3; ++i) dirs.push_back(random_solenoidal(g, 1, detail::field_band(cfg, g), cfg.seed, 20 + i));
    const double lip = lipschitz_probe(f, a.pair.velocity, lift, pc, dirs, 0.5 * pc.rho);
    solve_assertions(rep, cfg, a.report, gap, lip);
  } catch (const PicardError& e) {
    solve_assertions(rep, cfg, e.report(), INFINITY, INFINITY);
  }
  explore(rep, cfg, [&](const PicardConfig& pc2) {
    return picard_steady(data(pc2.epsilon), pc2, build_lifting(pc2.lambda, cfg.cutoff, g)).report;
  });
  return rep;
}

ExperimentReport run_picard_tp(const ExperimentConfig& cfg) {
  cfg.validate();
  const PicardSetup s = picard_setup(cfg, true);
  ExperimentReport rep = picard_header(cfg, s);
  if (!s.found) return rep;

  const PicardConfig pc = run_config(cfg, s);
  const GridSpec& g = cfg.grid;
  const int K = std::max(1, cfg.max_mode);
  const int band = detail::field_band(cfg, g);
  TimePeriodicField shape = TimePeriodicField::constant(random_forcing(cfg, 10), cfg.period, K);
  shape += random_oscillatory(g, 1, band, cfg.period, K, cfg.seed, 12);
  const double shape_size = bochner_lq(shape, cfg.q) + negative_norm_surrogate(shape.mode(0), cfg.r).value;
  const auto data = [&](double eps) {
    TimePeriodicField f = shape;
    f *= eps / shape_size * (1.0 - 1e-9);
    return f;
  };
  const TimePeriodicField f = data(pc.epsilon);
  const LiftingField lift = build_lifting(pc.lambda, cfg.cutoff, g);
  try {
    const TimePeriodicSolution a = picard_timeperiodic(f, pc, lift);
    const TimePeriodicField zero(g, g.dim, cfg.period, K);
    const TimePeriodicSolution b = picard_timeperiodic(f, pc, lift, &zero);
    const TimePeriodicField sf =
        solve_timeperiodic(f, OseenParams{pc.lambda, std::max(1.0, pc.lambda), g.dim}).velocity;
    const TimePeriodicSolution c = picard_timeperiodic(f, pc, lift, &sf);
    const double un = timeperiodic_driver_norm(a.pair.velocity, pc);
    const double gap = std::max(timeperiodic_driver_norm(b.pair.velocity - a.pair.velocity, pc),
                                timeperiodic_driver_norm(c.pair.velocity - a.pair.velocity, pc)) / un;
    std::vector<TimePeriodicField> dirs;
    for (int i = 0; i < 2; ++i) {
      TimePeriodicField d = TimePeriodicField::constant(random_solenoidal(g, 1, band, cfg.seed, 20 + i), cfg.period, K);
      d += random_oscillatory(g, 1, band, cfg.period, K, cfg.seed, 30 + i);
      dirs.push_back(std::move(d));
    }
    const double lip = lipschitz_probe(f, a.pair.velocity, lift, pc, dirs, 0.5 * pc.rho);
    solve_assertions(rep, cfg, a.report, gap, lip);
  } catch (const PicardError& e) {
    solve_assertions(rep, cfg, e.report(), INFINITY, INFINITY);
  }
  explore(rep, cfg, [&](const PicardConfig& pc2) {
    return picard_timeperiodic(data(pc2.epsilon), pc2, build_lifting(pc2.lambda, cfg.cutoff, g)).report;
  });
  return rep;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  switch (cfg.experiment) {
    case Experiment::MMS: return run_mms(cfg);
    case Experiment::ScalingSteady: return run_scaling_steady(cfg);
    case Experiment::ScalingTP: return run_scaling_tp(cfg);
    case Experiment::BilinearEnsemble: return run_bilinear_ensemble(cfg);
    case Experiment::PicardSteady: return run_picard_steady(cfg);
    case Experiment::PicardTP: return run_picard_tp(cfg);
    case Experiment::LiftingCheck: return run_lifting_check(cfg);
  }
  throw std::invalid_argument("run_experiment: unknown experiment");
}

ExperimentReport exponent_table(int n, double q, double r) {
  ExperimentReport rep;
  rep.name = "exponents";
  rep.header = {"n", "q", "r", "s", "M", "delta", "theta", "steady_ok", "timeperiodic_ok", "linear_ok"};
  const ExponentProfile p = make_profile(n, q, r);
  const Problem probs[3] = {Problem::SteadyNS, Problem::TimePeriodicNS, Problem::LinearFull};
  std::array<double, 3> ok{};
  for (int i = 0; i < 3; ++i) {
    const Admissibility a = admissibility(n, q, r, probs[i]);
    ok[i] = a.ok ? 1.0 : 0.0;
  }
  rep.rows.push_back({double(n), q, r, p.s, double(p.M), double(p.delta), p.theta ? *p.theta : NAN, ok[0], ok[1], ok[2]});
  const auto [lo, hi] = timeperiodic_q_window(n);
  rep.add("timeperiodic_q_lo", lo);
  rep.add("timeperiodic_q_hi", hi);
  rep.add("theta_defined", p.theta ? 1.0 : 0.0);
  return rep;
}

}  // namespace oseenlab
