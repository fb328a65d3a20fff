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

#include "oseenlab/nonlinear.hpp"

#include <stdexcept>
#include <vector>

#include "oseenlab/spectral.hpp"

namespace oseenlab {
namespace {

void check_lifting(const GridSpec& g, const LiftingField& lift) {
  require_same_grid(g, lift.coefficients.grid(), "nonlinearity");
}

std::vector<SpectralField> time_samples(const TimePeriodicField& u, int nt) {
  std::vector<SpectralField> out;
  out.reserve(static_cast<std::size_t>(nt));
  for (int j = 0; j < nt; ++j) out.push_back(u.at_time(u.period() * j / nt));
  return out;
}

SpectralField negated_convective(const SpectralField& a, const SpectralField& b) {
  SpectralField c = convective_term(a, b);
  c *= Complex(-1.0, 0.0);
  return c;
}

}  // namespace

int nonlinear_time_samples(int max_mode) { return 4 * max_mode + 1; }

SpectralField nonlinearity(const SpectralField& u, const LiftingField& lift, double lambda) {
  check_lifting(u.grid(), lift);
  // The four convective products equal one product of u + V by bilinearity.
  const SpectralField full = u + lift.coefficients;
  SpectralField out = lifting_forcing(lift, lambda);
  out *= Complex(-1.0, 0.0);
  out -= convective_term(full, full);
  return out;
}

VectorField nonlinearity(const VectorField& u, const LiftingField& lift, double lambda) {
  return from_spectral(nonlinearity(to_spectral(u), lift, lambda));
}

TimePeriodicField nonlinearity(const TimePeriodicField& u, const LiftingField& lift, double lambda) {
  check_lifting(u.grid(), lift);
  const int nt = nonlinear_time_samples(u.max_mode());
  const SpectralField forcing = [&] {
    SpectralField f = lifting_forcing(lift, lambda);
    f *= Complex(-1.0, 0.0);
    return f;
  }();
  std::vector<SpectralField> samples = time_samples(u, nt);
  for (auto& s : samples) {
    const SpectralField full = s + lift.coefficients;
    s = forcing - convective_term(full, full);
  }
  return TimePeriodicField::from_samples(samples, u.period(), u.max_mode());
}

SplitNonlinearity split_nonlinearity(const TimePeriodicField& u, const LiftingField& lift, double lambda) {
  check_lifting(u.grid(), lift);
  const GridSpec& g = u.grid();
  const int K = u.max_mode();
  const double T = u.period();
  const int nt = nonlinear_time_samples(K);
  const SpectralField& v = u.mode(0);
  const SpectralField& V = lift.coefficients;
  TimePeriodicField w = u;
  w.mode(0) = SpectralField(g, u.components());
  const std::vector<SpectralField> ws = time_samples(w, nt);

  SplitNonlinearity out;
  std::array<std::vector<SpectralField>, 5> osc;
  std::vector<SpectralField> ww;
  for (int j = 0; j < nt; ++j) {
    const SpectralField& wj = ws[static_cast<std::size_t>(j)];
    ww.push_back(negated_convective(wj, wj));
    osc[0].push_back(negated_convective(v, wj));
    osc[1].push_back(negated_convective(wj, v));
    osc[3].push_back(negated_convective(wj, V));
    osc[4].push_back(negated_convective(V, wj));
  }
  const TimePeriodicField wgw = TimePeriodicField::from_samples(ww, T, K);

  out.steady_terms[0] = negated_convective(v, v);
  out.steady_terms[1] = wgw.mode(0);
  out.steady_terms[2] = negated_convective(v, V);
  out.steady_terms[3] = negated_convective(V, v);
  out.steady_terms[4] = negated_convective(V, V);
  out.steady_terms[5] = laplacian(V);
  out.steady_terms[6] = spectral_derivative(V, 1);
  out.steady_terms[6] *= Complex(-lambda, 0.0);

  for (int t = 0; t < 5; ++t) {
    if (t == 2) {
      TimePeriodicField p = wgw;
      p.mode(0) = SpectralField(g, u.components());
      out.oscillatory_terms[2] = std::move(p);
    } else {
      TimePeriodicField p = TimePeriodicField::from_samples(osc[static_cast<std::size_t>(t)], T, K);
      p.mode(0) = SpectralField(g, u.components());
      out.oscillatory_terms[static_cast<std::size_t>(t)] = std::move(p);
    }
  }

  out.steady = SpectralField(g, u.components());
  for (const auto& s : out.steady_terms) out.steady += s;
  out.oscillatory = TimePeriodicField(g, u.components(), T, K);
  for (const auto& o : out.oscillatory_terms) out.oscillatory += o;
  return out;
}

}  // namespace oseenlab
