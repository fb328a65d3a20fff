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

#include "oseenlab/penalization.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "oseenlab/spectral.hpp"

namespace oseenlab {
namespace {

double periodic_offset(double x, double c, double length) {
  double d = x - c;
  d -= length * std::round(d / length);
  return d;
}

SpectralField masked(const SpectralField& u, const ScalarField& chi) {
  VectorField phys = from_spectral(u);
  for (int c = 0; c < phys.components(); ++c) {
    auto v = phys.component(c);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] *= chi[i];
  }
  return to_spectral(phys);
}

void obstacle_stats(const VectorField& u, const ScalarField& chi, PenalizedSolve& rep) {
  double l2 = 0.0;
  double mx = 0.0;
  for (std::size_t i = 0; i < chi.values().size(); ++i) {
    if (chi[i] == 0.0) continue;
    double m = 0.0;
    for (int c = 0; c < u.components(); ++c) m += u.component(c)[i] * u.component(c)[i];
    l2 += m;
    mx = std::max(mx, std::sqrt(m));
  }
  rep.obstacle_l2 = std::sqrt(l2 * chi.grid().cell_volume());
  rep.obstacle_max = mx;
}

SpectralPair oseen_solve(const SpectralField& rhs, double lambda) { return apply_oseen_symbol(rhs, lambda, 0.0); }

}  // namespace

ObstacleMask ObstacleMask::ball(const GridSpec& grid, double radius, double penalization) {
  const double c = grid.length() / 2.0;
  return ball(grid, {c, c, c}, radius, penalization);
}

ObstacleMask ObstacleMask::ball(const GridSpec& grid, const std::array<double, 3>& center, double radius,
                                double penalization) {
  ObstacleMask m{ScalarField(grid), penalization};
  for_each_point(grid, [&](std::size_t i, const std::array<double, 3>& x) {
    double r2 = 0.0;
    for (int a = 0; a < grid.dim; ++a) {
      const double d = periodic_offset(x[a], center[a], grid.length());
      r2 += d * d;
    }
    m.indicator[i] = r2 < radius * radius ? 1.0 : 0.0;
  });
  m.validate();
  return m;
}

ObstacleMask ObstacleMask::empty(const GridSpec& grid, double penalization) {
  return ObstacleMask{ScalarField(grid), penalization};
}

bool ObstacleMask::is_empty() const {
  return std::all_of(indicator.values().begin(), indicator.values().end(), [](double v) { return v == 0.0; });
}

void ObstacleMask::validate() const {
  if (!(penalization > 0.0)) throw std::invalid_argument("ObstacleMask: penalization must be positive");
  const GridSpec& g = indicator.grid();
  for (int i0 = 0; i0 < g.extent(0); ++i0) {
    for (int i1 = 0; i1 < g.extent(1); ++i1) {
      for (int i2 = 0; i2 < g.extent(2); ++i2) {
        const double v = indicator[g.flat(i0, i1, i2)];
        if (v != 0.0 && v != 1.0) throw std::invalid_argument("ObstacleMask: indicator must be 0/1");
        if (v == 0.0) continue;
        const std::array<int, 3> idx{i0, i1, i2};
        for (int a = 0; a < g.dim; ++a) {
          if (idx[a] < 2 || idx[a] >= g.points - 2) {
            throw std::invalid_argument("ObstacleMask: obstacle touches the box boundary layer");
          }
        }
      }
    }
  }
}

PenalizedSolve solve_exterior_penalized(const VectorField& f, const OseenParams& params, const ObstacleMask& mask,
                                        double tol, int max_iter, const VectorField* initial) {
  if (!(params.lambda >= 0.0)) throw std::invalid_argument("solve_exterior_penalized: lambda must be nonnegative");
  require_same_grid(f.grid(), mask.indicator.grid(), "solve_exterior_penalized");
  mask.validate();
  const GridSpec& g = f.grid();
  const SpectralField fh = to_spectral(f);
  const double inv_eta = 1.0 / mask.penalization;
  PenalizedSolve rep;

  if (mask.is_empty()) {
    SpectralPair s = oseen_solve(fh, params.lambda);
    rep.pair = {from_spectral(s.velocity), scalar_from_spectral(s.pressure)};
    rep.converged = true;
    return rep;
  }

  // Spectral radius of A = eta^{-1} S chi by power iteration; A is similar to a
  // nonnegative operator when lambda = 0, and nearly so for small drift.
  SpectralField probe = oseen_solve(fh, params.lambda).velocity;
  if (l2_norm_coefficients(probe) == 0.0) {
    probe = SpectralField(g, g.dim);
    for_each_mode(g, [&](const Mode& md) {
      if (md.retained && md.xi2 > 0.0 && md.xi2 <= 4.0 / (g.half_period * g.half_period)) {
        probe.block(g.dim - 1)[md.flat] = Complex(1.0, 0.0);
      }
    });
    probe = leray_project(probe);
  }
  double radius = 0.0;
  for (int it = 0; it < 30; ++it) {
    SpectralField next = oseen_solve(masked(probe, mask.indicator), params.lambda).velocity;
    next *= Complex(inv_eta, 0.0);
    const double a = l2_norm_coefficients(probe);
    const double b = l2_norm_coefficients(next);
    if (a == 0.0 || b == 0.0) break;
    radius = b / a;
    next *= Complex(1.0 / b, 0.0);
    probe = std::move(next);
  }
  double omega = 2.0 / (2.0 + 1.05 * radius);
  rep.relaxation = omega;

  SpectralField u = initial ? to_spectral(*initial) : oseen_solve(fh, params.lambda).velocity;
  double previous_update = INFINITY;
  for (int it = 1; it <= max_iter; ++it) {
    SpectralField rhs = masked(u, mask.indicator);
    rhs *= Complex(-inv_eta, 0.0);
    rhs += fh;
    SpectralField target = oseen_solve(rhs, params.lambda).velocity;
    SpectralField next = u;
    next *= Complex(1.0 - omega, 0.0);
    target *= Complex(omega, 0.0);
    next += target;
    const double change = l2_norm_coefficients(next - u);
    const double size = l2_norm_coefficients(next);
    const double update = size > 0.0 ? change / size : change;
    u = std::move(next);
    rep.iterations = it;
    rep.final_update = update;
    if (update <= tol) {
      rep.converged = true;
      break;
    }
    if (update > 1.5 * previous_update && omega > 1e-3) {
      omega *= 0.5;
      rep.relaxation = omega;
    }
    previous_update = update;
  }

  SpectralField rhs = masked(u, mask.indicator);
  rhs *= Complex(-inv_eta, 0.0);
  rhs += fh;
  SpectralPair s = oseen_solve(rhs, params.lambda);
  rep.pair = {from_spectral(s.velocity), scalar_from_spectral(s.pressure)};
  obstacle_stats(rep.pair.velocity, mask.indicator, rep);
  if (!rep.converged) {
    throw ConvergenceError("solve_exterior_penalized: no convergence after " + std::to_string(max_iter) +
                               " iterations, final relative update " + std::to_string(rep.final_update),
                           rep);
  }
  return rep;
}

}  // namespace oseenlab
