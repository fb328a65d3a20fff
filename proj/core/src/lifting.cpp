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

#include "oseenlab/lifting.hpp"

#include <cmath>
#include <stdexcept>

#include "oseenlab/norms.hpp"
#include "oseenlab/spectral.hpp"

namespace oseenlab {

void CutoffSpec::validate() const {
  if (!(inner_radius > 0.0) || !(outer_radius > inner_radius)) {
    throw std::invalid_argument("CutoffSpec: need 0 < inner_radius < outer_radius");
  }
  if (!(sharpness > 0.0)) throw std::invalid_argument("CutoffSpec: sharpness must be positive");
}

std::array<double, 3> CutoffSpec::center_on(const GridSpec& grid) const {
  if (center) return *center;
  const double c = grid.length() / 2.0;
  return {c, c, grid.dim > 2 ? c : 0.0};
}

ProfileValue cutoff_profile(const CutoffSpec& spec, double rho) {
  const double width = spec.outer_radius - spec.inner_radius;
  const double t = (rho - spec.inner_radius) / width;
  if (t <= 0.0) return {1.0, 0.0, 0.0};
  if (t >= 1.0) return {0.0, 0.0, 0.0};
  const double a = spec.sharpness;
  const double e = a / t - a / (1.0 - t);
  // S = 1/(1+exp(e)); S(1-S) written without cancellation.
  double s = 0.0;
  double s1ms = 0.0;
  if (e > 0.0) {
    const double x = std::exp(-e);
    s = x / (1.0 + x);
    s1ms = x / ((1.0 + x) * (1.0 + x));
  } else {
    const double x = std::exp(e);
    s = 1.0 / (1.0 + x);
    s1ms = x / ((1.0 + x) * (1.0 + x));
  }
  const double g = a / (t * t) + a / ((1.0 - t) * (1.0 - t));
  const double dg = -2.0 * a / (t * t * t) + 2.0 * a / ((1.0 - t) * (1.0 - t) * (1.0 - t));
  const double ds = s1ms * g;
  const double d2s = ds * (1.0 - 2.0 * s) * g + s1ms * dg;
  return {1.0 - s, -ds / width, -d2s / (width * width)};
}

namespace {

double periodic_offset(double x, double c, double length) {
  double d = x - c;
  d -= length * std::round(d / length);
  return d;
}

void check_support(const CutoffSpec& spec, const GridSpec& grid) {
  spec.validate();
  const auto c = spec.center_on(grid);
  for (int a = 0; a < grid.dim; ++a) {
    const double room = std::min(c[a], grid.length() - c[a]) - 2.0 * grid.spacing();
    if (spec.outer_radius > room) {
      throw std::invalid_argument("CutoffSpec: support touches the box boundary");
    }
  }
}

}  // namespace

ScalarField build_cutoff(const CutoffSpec& spec, const GridSpec& grid) {
  check_support(spec, grid);
  const auto c = spec.center_on(grid);
  ScalarField phi(grid);
  for_each_point(grid, [&](std::size_t i, const std::array<double, 3>& x) {
    double r2 = 0.0;
    for (int a = 0; a < grid.dim; ++a) {
      const double d = periodic_offset(x[a], c[a], grid.length());
      r2 += d * d;
    }
    phi[i] = cutoff_profile(spec, std::sqrt(r2)).value;
  });
  return phi;
}

LiftingField build_lifting(double lambda, const CutoffSpec& spec, const GridSpec& grid) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("build_lifting: lambda must be nonnegative");
  check_support(spec, grid);
  const auto c = spec.center_on(grid);
  const ScalarField phi = build_cutoff(spec, grid);
  ScalarField generator(grid);
  for_each_point(grid, [&](std::size_t i, const std::array<double, 3>& x) {
    const double y = periodic_offset(x[1], c[1], grid.length());
    generator[i] = phi[i] * y * y;
  });
  const SpectralField wh = to_spectral(generator);
  SpectralField vh(grid, grid.dim);
  auto w = wh.block(0);
  for_each_mode(grid, [&](const Mode& md) {
    if (md.nyquist) return;
    // (lambda/2) (|xi|^2 w e_1 - xi (xi_1 w))
    for (int a = 0; a < grid.dim; ++a) {
      const double diag = a == 0 ? md.xi2 : 0.0;
      vh.block(a)[md.flat] = 0.5 * lambda * (diag - md.xi[a] * md.xi[0]) * w[md.flat];
    }
  });
  return LiftingField{from_spectral(vh), vh, lambda};
}

SpectralField lifting_forcing(const LiftingField& lift, double lambda) {
  SpectralField out = laplacian(lift.coefficients);
  out *= Complex(-1.0, 0.0);
  SpectralField drift = spectral_derivative(lift.coefficients, 1);
  drift *= Complex(lambda, 0.0);
  out += drift;
  return out;
}

LiftingLoad lifting_load(const LiftingField& lift, double lambda, double q, double r) {
  const SpectralField g = lifting_forcing(lift, lambda);
  LiftingLoad out;
  out.lq = lq_norm(g, q);
  out.negative = negative_norm_surrogate(g, r).value;
  out.ratio = lambda > 0.0 ? (out.lq + out.negative) / (lambda * (1.0 + lambda)) : 0.0;
  return out;
}

}  // namespace oseenlab
