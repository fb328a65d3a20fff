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
#include <limits>
#include <numbers>

#include "harness_detail.hpp"
#include "oseenlab/norms.hpp"
#include "oseenlab/spectral.hpp"

#ifdef OSEENLAB_HAVE_OPENMP
#include <omp.h>
#endif

namespace oseenlab {

void set_thread_count(int threads) {
#ifdef OSEENLAB_HAVE_OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

namespace detail {

int field_band(const ExperimentConfig& cfg, const GridSpec& grid) {
  return cfg.field_max_mode > 0 ? cfg.field_max_mode : std::max(1, grid.points / 8);
}

SpectralField bump_forcing(const GridSpec& grid, double width) {
  const double c = grid.length() / 2.0;
  const double amp = 1.0 / std::numbers::sqrt2;
  VectorField f(grid);
  for_each_point(grid, [&](std::size_t i, const std::array<double, 3>& x) {
    double r2 = 0.0;
    for (int a = 0; a < grid.dim; ++a) r2 += (x[a] - c) * (x[a] - c);
    const double g = std::exp(-0.5 * r2 / (width * width));
    f.component(0)[i] = amp * g;
    f.component(1)[i] = amp * g;
  });
  return remove_mean(drop_nyquist(dealias(to_spectral(f))));
}

TimePeriodicField gradient(const TimePeriodicField& scalar) {
  const int K = scalar.max_mode();
  TimePeriodicField out(scalar.grid(), scalar.grid().dim, scalar.period(), K);
  for (int k = -K; k <= K; ++k) out.mode(k) = oseenlab::gradient(scalar.mode(k));
  return out;
}

TimePeriodicField convective(const TimePeriodicField& a, const TimePeriodicField& b, int max_mode) {
  const int samples = 2 * max_mode + 1 + 2 * std::max(a.max_mode(), b.max_mode());
  std::vector<SpectralField> values;
  values.reserve(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    const double t = a.period() * j / samples;
    values.push_back(convective_term(a.at_time(t), b.at_time(t)));
  }
  return TimePeriodicField::from_samples(values, a.period(), max_mode);
}

double plancherel_l2(const TimePeriodicField& u) {
  double sum = 0.0;
  for (int k = -u.max_mode(); k <= u.max_mode(); ++k) {
    const double l2 = l2_norm_coefficients(u.mode(k));
    sum += l2 * l2;
  }
  return std::sqrt(sum);
}

TimePeriodicField time_derivative(const TimePeriodicField& u) {
  TimePeriodicField out = u;
  for (int k = -u.max_mode(); k <= u.max_mode(); ++k) out.mode(k) *= Complex(0.0, u.omega(k));
  return out;
}

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale > 0 ? std::abs(a - b) / scale : 0.0;
}

BilinearSample bilinear_sample(const GridSpec& grid, int band, double period, int K, double q, double r,
                               std::uint64_t seed, int index) {
  const int n = grid.dim;
  const double s = sobolev_exponent_s(n, r);
  const auto base = static_cast<std::uint64_t>(index) * 4;
  const SpectralField v1 = random_solenoidal(grid, 1, band, seed, base);
  const SpectralField v2 = random_solenoidal(grid, 1, band, seed, base + 1);
  const TimePeriodicField w1 = random_oscillatory(grid, 1, band, period, K, seed, base + 2);
  const TimePeriodicField w2 = random_oscillatory(grid, 1, band, period, K, seed, base + 3);

  BilinearSample out;
  out.A1 = sobolev_seminorm(v1, 2, q) + sobolev_seminorm(v1, 1, r);
  out.B1 = lq_norm(v1, s);
  out.A2 = sobolev_seminorm(v2, 2, q) + sobolev_seminorm(v2, 1, r);
  out.B2 = lq_norm(v2, s);
  out.X1 = maxreg_norm(w1, q);
  out.X2 = maxreg_norm(w2, q);

  const SpectralField vv = convective_term(v1, v2);
  out.num[0] = lq_norm(vv, q);
  out.num[1] = negative_norm_surrogate(vv, r).value;
  const TimePeriodicField ww = convective(w1, w2, 2 * K);
  out.num[2] = bochner_lq(ww, q);
  out.num[3] = negative_norm_surrogate(ww.mode(0), r).value;
  const TimePeriodicField v1t = TimePeriodicField::constant(v1, period, 0);
  const TimePeriodicField v2t = TimePeriodicField::constant(v2, period, 0);
  out.num[4] = bochner_lq(convective(v1t, w2, K), q);
  out.num[5] = bochner_lq(convective(w1, v2t, K), q);
  return out;
}

BilinearFit fit_bilinear(const std::vector<BilinearSample>& samples, std::size_t count,
                         const std::vector<double>& lambdas, int n) {
  BilinearFit fit;
  fit.lambdas = lambdas;
  const double p = 1.0 / (n + 1);
  for (std::size_t i = 0; i < count; ++i) {
    const auto& b = samples[i];
    fit.crossover = std::max({fit.crossover, std::pow(b.A1 / b.B1, n + 1), std::pow(b.A2 / b.B2, n + 1)});
  }
  for (int j = 0; j < 6; ++j) fit.sup[j].assign(lambdas.size(), 0.0);
  for (std::size_t l = 0; l < lambdas.size(); ++l) {
    const double w = std::pow(lambdas[l], p);
    for (std::size_t i = 0; i < count; ++i) {
      const auto& b = samples[i];
      const double d1 = b.A1 + w * b.B1;
      const double d2 = b.A2 + w * b.B2;
      const std::array<double, 6> den{d1 * d2, d1 * d2, b.X1 * b.X2, b.X1 * b.X2, d1 * b.X2, b.X1 * d2};
      for (int j = 0; j < 6; ++j) fit.sup[j][l] = std::max(fit.sup[j][l], b.num[j] / den[j]);
    }
  }
  for (int j = 0; j < 6; ++j) {
    const bool weighted = j == 0 || j == 1 || j == 4 || j == 5;
    if (weighted && lambdas.size() >= 2) {
      const LogLogFit f = fit_loglog(lambdas, fit.sup[j]);
      fit.exponent[j] = -(n + 1) * f.slope;
      fit.leverage[j] = (n + 1) * f.leverage;
    }
    const double e = std::max(0.0, fit.exponent[j]);
    double c = 0.0;
    for (std::size_t l = 0; l < lambdas.size(); ++l) c = std::max(c, fit.sup[j][l] * std::pow(lambdas[l], e * p));
    fit.constant[j] = c;
  }
  return fit;
}

}  // namespace detail
}  // namespace oseenlab
