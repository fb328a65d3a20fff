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

#pragma once

#include <cmath>
#include <functional>
#include <random>

#include "oseenlab/field.hpp"
#include "oseenlab/spectral.hpp"

namespace testing {

using oseenlab::GridSpec;
using oseenlab::ScalarField;
using oseenlab::VectorField;
using Point = std::array<double, 3>;

inline GridSpec grid(int dim, int n, double half_period = 1.0) {
  GridSpec g;
  g.dim = dim;
  g.points = n;
  g.half_period = half_period;
  return g;
}

inline ScalarField sample(const GridSpec& g, const std::function<double(const Point&)>& fn) {
  ScalarField out(g);
  oseenlab::for_each_point(g, [&](std::size_t i, const Point& x) { out[i] = fn(x); });
  return out;
}

inline VectorField sample(const GridSpec& g, const std::function<double(const Point&, int)>& fn) {
  VectorField out(g);
  oseenlab::for_each_point(g, [&](std::size_t i, const Point& x) {
    for (int c = 0; c < g.dim; ++c) out.component(c)[i] = fn(x, c);
  });
  return out;
}

// A few random Fourier modes of a real trigonometric polynomial in x/L.
struct TrigPoly {
  struct Term {
    std::array<int, 3> m;
    double a, b;
  };
  std::vector<Term> terms;
  double L = 1.0;

  static TrigPoly random(int dim, int max_mode, int count, std::mt19937_64& rng, double L = 1.0) {
    std::uniform_int_distribution<int> mode(-max_mode, max_mode);
    std::normal_distribution<double> amp(0.0, 1.0);
    TrigPoly p;
    p.L = L;
    while (static_cast<int>(p.terms.size()) < count) {
      Term t{{mode(rng), mode(rng), dim == 3 ? mode(rng) : 0}, amp(rng), amp(rng)};
      if (t.m[0] == 0 && t.m[1] == 0 && t.m[2] == 0) continue;
      p.terms.push_back(t);
    }
    return p;
  }
  double phase(const Term& t, const Point& x) const {
    return (t.m[0] * x[0] + t.m[1] * x[1] + t.m[2] * x[2]) / L;
  }
  double value(const Point& x) const {
    double s = 0.0;
    for (const auto& t : terms) s += t.a * std::cos(phase(t, x)) + t.b * std::sin(phase(t, x));
    return s;
  }
  // d/dx_j
  double deriv(const Point& x, int j) const {
    double s = 0.0;
    for (const auto& t : terms) {
      const double k = t.m[j] / L;
      s += k * (-t.a * std::sin(phase(t, x)) + t.b * std::cos(phase(t, x)));
    }
    return s;
  }
};

// Divergence-free field from stream functions: 2D u = (d2 psi, -d1 psi);
// 3D u = curl(A) with three potentials.
inline VectorField solenoidal(const GridSpec& g, int max_mode, std::uint64_t seed, int terms = 6) {
  std::mt19937_64 rng(seed);
  if (g.dim == 2) {
    const TrigPoly psi = TrigPoly::random(2, max_mode, terms, rng, g.half_period);
    return sample(g, [&](const Point& x, int c) { return c == 0 ? psi.deriv(x, 1) : -psi.deriv(x, 0); });
  }
  const TrigPoly a0 = TrigPoly::random(3, max_mode, terms, rng, g.half_period);
  const TrigPoly a1 = TrigPoly::random(3, max_mode, terms, rng, g.half_period);
  const TrigPoly a2 = TrigPoly::random(3, max_mode, terms, rng, g.half_period);
  return sample(g, [&](const Point& x, int c) {
    switch (c) {
      case 0: return a2.deriv(x, 1) - a1.deriv(x, 2);
      case 1: return a0.deriv(x, 2) - a2.deriv(x, 0);
      default: return a1.deriv(x, 0) - a0.deriv(x, 1);
    }
  });
}

inline double max_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_diff(const VectorField& a, const VectorField& b) {
  double m = 0.0;
  for (int c = 0; c < a.components(); ++c) m = std::max(m, max_diff(a.component(c), b.component(c)));
  return m;
}

inline double max_abs(const VectorField& a) {
  double m = 0.0;
  for (int c = 0; c < a.components(); ++c)
    for (double v : a.component(c)) m = std::max(m, std::abs(v));
  return m;
}

inline double max_diff(const oseenlab::SpectralField& a, const oseenlab::SpectralField& b) {
  return oseenlab::max_abs(a - b);
}

}  // namespace testing
