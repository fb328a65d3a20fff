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

#include "oseenlab/oseen.hpp"

#include <cmath>
#include <stdexcept>

#include "oseenlab/spectral.hpp"

namespace oseenlab {
namespace {

// Wave vector as seen by first derivatives: Nyquist components are zero.
std::array<double, 3> derivative_wavevector(const GridSpec& g, const Mode& md) {
  std::array<double, 3> k = md.xi;
  for (int a = 0; a < g.dim; ++a) {
    if (g.is_nyquist(md.index[a])) k[a] = 0.0;
  }
  return k;
}

void check_vector(const SpectralField& f, const char* where) {
  if (f.components() != f.grid().dim) throw std::invalid_argument(std::string(where) + ": expected a vector field");
}

}  // namespace

void OseenParams::validate() const {
  if (dim != 2 && dim != 3) throw std::invalid_argument("OseenParams: dim must be 2 or 3");
  if (!(lambda > 0.0)) throw std::invalid_argument("OseenParams: lambda must be positive");
  if (!(lambda <= lambda_max)) throw std::invalid_argument("OseenParams: lambda exceeds lambda_max");
}

SpectralField leray_project(const SpectralField& f) {
  check_vector(f, "leray_project");
  const GridSpec& g = f.grid();
  SpectralField out = f;
  for_each_mode(g, [&](const Mode& md) {
    const auto k = derivative_wavevector(g, md);
    double k2 = 0.0;
    for (int a = 0; a < g.dim; ++a) k2 += k[a] * k[a];
    if (k2 == 0.0) return;
    Complex dot{};
    for (int a = 0; a < g.dim; ++a) dot += k[a] * f.block(a)[md.flat];
    for (int a = 0; a < g.dim; ++a) out.block(a)[md.flat] -= k[a] * dot / k2;
  });
  return out;
}

VectorField leray_project(const VectorField& f) { return from_spectral(leray_project(to_spectral(f))); }

SpectralPair apply_oseen_symbol(const SpectralField& f, double lambda, double omega) {
  check_vector(f, "apply_oseen_symbol");
  if (!(lambda >= 0.0)) throw std::invalid_argument("apply_oseen_symbol: lambda must be nonnegative");
  const GridSpec& g = f.grid();
  SpectralPair out{SpectralField(g, g.dim), SpectralField(g, 1)};
  auto p = out.pressure.block(0);
  for_each_mode(g, [&](const Mode& md) {
    if (md.nyquist) return;
    const std::size_t i = md.flat;
    if (md.xi2 == 0.0) {
      if (omega != 0.0) {
        for (int a = 0; a < g.dim; ++a) out.velocity.block(a)[i] = f.block(a)[i] / Complex(0.0, omega);
      }
      return;
    }
    Complex dot{};
    for (int a = 0; a < g.dim; ++a) dot += md.xi[a] * f.block(a)[i];
    const Complex symbol(md.xi2, lambda * md.xi[0] + omega);
    for (int a = 0; a < g.dim; ++a) {
      out.velocity.block(a)[i] = (f.block(a)[i] - md.xi[a] * dot / md.xi2) / symbol;
    }
    p[i] = Complex(0.0, -1.0) * dot / md.xi2;
  });
  return out;
}

SpectralPair solve_steady(const SpectralField& f, const OseenParams& params) {
  params.validate();
  if (f.grid().dim != params.dim) throw std::invalid_argument("solve_steady: dimension mismatch");
  return apply_oseen_symbol(f, params.lambda, 0.0);
}

StokesPair solve_steady(const VectorField& f, const OseenParams& params) {
  const SpectralPair s = solve_steady(to_spectral(f), params);
  return {from_spectral(s.velocity), scalar_from_spectral(s.pressure)};
}

SpectralPair solve_mode(const SpectralField& f_k, int k, double period, const OseenParams& params) {
  params.validate();
  if (!(period > 0.0)) throw std::invalid_argument("solve_mode: period must be positive");
  return apply_oseen_symbol(f_k, params.lambda, 2.0 * std::numbers::pi * k / period);
}

TimePeriodicPair solve_timeperiodic(const TimePeriodicField& f, const OseenParams& params) {
  params.validate();
  const GridSpec& g = f.grid();
  if (f.components() != g.dim) throw std::invalid_argument("solve_timeperiodic: expected a vector field");
  TimePeriodicPair out{TimePeriodicField(g, g.dim, f.period(), f.max_mode()),
                       TimePeriodicField(g, 1, f.period(), f.max_mode())};
  for (int k = -f.max_mode(); k <= f.max_mode(); ++k) {
    SpectralPair m = solve_mode(f.mode(k), k, f.period(), params);
    out.velocity.mode(k) = std::move(m.velocity);
    out.pressure.mode(k) = std::move(m.pressure);
  }
  return out;
}

VectorField project_steady(const TimePeriodicField& f) { return from_spectral(f.mode(0)); }

TimePeriodicField project_oscillatory(const TimePeriodicField& f) {
  TimePeriodicField out = f;
  out.mode(0) = SpectralField(f.grid(), f.components());
  return out;
}

double l2_norm_coefficients(const SpectralField& f) {
  double acc = 0.0;
  for (int c = 0; c < f.components(); ++c) {
    for (const Complex& v : f.block(c)) acc += std::norm(v);
  }
  return std::sqrt(acc * f.grid().volume());
}

namespace {

// -Laplace u + lambda d_1 u + i omega u + grad p - f
SpectralField momentum_defect(const SpectralPair& pair, const SpectralField& f, double lambda, double omega) {
  const GridSpec& g = f.grid();
  SpectralField r = laplacian(pair.velocity);
  r *= Complex(-1.0, 0.0);
  SpectralField drift = spectral_derivative(pair.velocity, 1);
  drift *= Complex(lambda, 0.0);
  r += drift;
  if (omega != 0.0) {
    SpectralField dt = pair.velocity;
    dt *= Complex(0.0, omega);
    r += dt;
  }
  r += gradient(pair.pressure);
  r -= f;
  (void)g;
  return r;
}

}  // namespace

Residual residual(const SpectralPair& pair, const SpectralField& f, double lambda) {
  require_same_grid(pair.velocity.grid(), f.grid(), "residual");
  return {l2_norm_coefficients(momentum_defect(pair, f, lambda, 0.0)),
          l2_norm_coefficients(divergence(pair.velocity))};
}

Residual residual(const StokesPair& pair, const VectorField& f, const OseenParams& params) {
  return residual(SpectralPair{to_spectral(pair.velocity), to_spectral(pair.pressure)}, to_spectral(f),
                  params.lambda);
}

Residual residual(const TimePeriodicPair& pair, const TimePeriodicField& f, double lambda) {
  double mom = 0.0;
  double div = 0.0;
  for (int k = -f.max_mode(); k <= f.max_mode(); ++k) {
    const SpectralPair m{pair.velocity.mode(k), pair.pressure.mode(k)};
    const double a = l2_norm_coefficients(momentum_defect(m, f.mode(k), lambda, f.omega(k)));
    const double b = l2_norm_coefficients(divergence(m.velocity));
    mom += a * a;
    div += b * b;
  }
  return {std::sqrt(mom), std::sqrt(div)};
}

}  // namespace oseenlab
