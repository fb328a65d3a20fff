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

#include "oseenlab/norms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "oseenlab/spectral.hpp"

namespace oseenlab {
namespace {

void check_exponent(double q, const char* where) {
  if (!(q > 1.0) || !std::isfinite(q)) throw std::invalid_argument(std::string(where) + ": exponent must lie in (1, inf)");
}

// Pointwise magnitudes of a stack of real arrays.
double lq_of_magnitude(const GridSpec& g, const std::vector<std::span<const double>>& comps, double q) {
  const std::size_t n = g.size();
  std::vector<double> mag2(n, 0.0);
  for (const auto& c : comps) {
    for (std::size_t i = 0; i < n; ++i) mag2[i] += c[i] * c[i];
  }
  double peak2 = 0.0;
  for (double m : mag2) {
    if (!std::isfinite(m)) throw std::domain_error("lq_norm: non-finite values");
    peak2 = std::max(peak2, m);
  }
  if (peak2 == 0.0) return 0.0;
  const double inv = 1.0 / peak2;
  const double half = 0.5 * q;
  double sum = 0.0;
  if (q == 2.0) {
    for (double m : mag2) sum += m * inv;
  } else if (q == 4.0) {
    for (double m : mag2) sum += (m * inv) * (m * inv);
  } else {
    for (double m : mag2) sum += std::pow(m * inv, half);
  }
  return std::sqrt(peak2) * std::pow(sum * g.cell_volume(), 1.0 / q);
}

std::vector<double> real_part_inverse(const GridSpec& g, std::span<const Complex> coeffs) {
  std::vector<Complex> buf(g.size());
  inverse_transform(g, coeffs, buf);
  std::vector<double> out(g.size());
  for (std::size_t i = 0; i < buf.size(); ++i) out[i] = buf[i].real();
  return out;
}

double lq_from_blocks(const GridSpec& g, const std::vector<std::vector<Complex>>& blocks, double q) {
  std::vector<std::vector<double>> phys;
  phys.reserve(blocks.size());
  for (const auto& b : blocks) phys.push_back(real_part_inverse(g, b));
  std::vector<std::span<const double>> spans(phys.begin(), phys.end());
  return lq_of_magnitude(g, spans, q);
}

// xi_a per coefficient, with the Nyquist index of axis a mapped to zero as in
// spectral_derivative.
std::vector<std::array<double, 3>> derivative_symbols(const GridSpec& g) {
  std::vector<std::array<double, 3>> sym(g.size());
  for_each_mode(g, [&](const Mode& md) {
    for (int a = 0; a < 3; ++a) sym[md.flat][a] = (a < g.dim && !g.is_nyquist(md.index[a])) ? md.xi[a] : 0.0;
  });
  return sym;
}

std::vector<std::vector<int>> multi_indices(int dim, int k) {
  std::vector<std::vector<int>> out;
  if (k == 1) {
    for (int a = 1; a <= dim; ++a) out.push_back({a});
  } else {
    for (int a = 1; a <= dim; ++a) {
      for (int b = a; b <= dim; ++b) out.push_back({a, b});
    }
  }
  return out;
}

}  // namespace

void NormRequest::validate() const {
  check_exponent(q_exponent, "NormRequest");
  check_exponent(r_exponent, "NormRequest");
  if (k_order < 0 || k_order > 2) throw std::invalid_argument("NormRequest: k_order must be 0, 1 or 2");
  if (!(lambda >= 0.0)) throw std::invalid_argument("NormRequest: lambda must be nonnegative");
}

double lq_norm(const ScalarField& f, double q) {
  check_exponent(q, "lq_norm");
  return lq_of_magnitude(f.grid(), {f.values()}, q);
}

double lq_norm(const VectorField& f, double q) {
  check_exponent(q, "lq_norm");
  std::vector<std::span<const double>> comps;
  for (int c = 0; c < f.components(); ++c) comps.push_back(f.component(c));
  return lq_of_magnitude(f.grid(), comps, q);
}

double lq_norm(const SpectralField& f, double q) {
  check_exponent(q, "lq_norm");
  std::vector<std::vector<Complex>> blocks;
  for (int c = 0; c < f.components(); ++c) blocks.emplace_back(f.block(c).begin(), f.block(c).end());
  return lq_from_blocks(f.grid(), blocks, q);
}

double sobolev_seminorm(const SpectralField& u, int k, double q) {
  if (k != 1 && k != 2) throw std::invalid_argument("sobolev_seminorm: k must be 1 or 2");
  check_exponent(q, "sobolev_seminorm");
  const GridSpec& g = u.grid();
  const auto sym = derivative_symbols(g);
  double total = 0.0;
  std::vector<std::vector<Complex>> blocks(static_cast<std::size_t>(u.components()), std::vector<Complex>(g.size()));
  for (const auto& alpha : multi_indices(g.dim, k)) {
    for (int c = 0; c < u.components(); ++c) {
      const auto src = u.block(c);
      auto& dst = blocks[static_cast<std::size_t>(c)];
      if (k == 1) {
        const int a = alpha[0] - 1;
        for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = Complex(0.0, sym[i][a]) * src[i];
      } else {
        const int a = alpha[0] - 1, b = alpha[1] - 1;
        for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = -(sym[i][a] * sym[i][b]) * src[i];
      }
    }
    total += lq_from_blocks(g, blocks, q);
  }
  return total;
}

double sobolev_seminorm(const VectorField& u, int k, double q) { return sobolev_seminorm(to_spectral(u), k, q); }

double w2q_norm(const SpectralField& u, double q) {
  return lq_norm(u, q) + sobolev_seminorm(u, 1, q) + sobolev_seminorm(u, 2, q);
}

NegativeNorm negative_norm_surrogate(const SpectralField& f, double r) {
  check_exponent(r, "negative_norm_surrogate");
  const GridSpec& g = f.grid();
  NegativeNorm out;
  const double scale = max_abs(f);
  for (int c = 0; c < f.components(); ++c) {
    if (std::abs(f.block(c)[0]) > 1e-12 * scale) out.mean_projected = true;
  }
  // G_{ij} = d_j (-Laplace)^{-1} f_i, magnitude = Frobenius norm over (i, j).
  std::vector<std::vector<Complex>> blocks;
  for (int c = 0; c < f.components(); ++c) {
    auto src = f.block(c);
    for (int j = 0; j < g.dim; ++j) {
      std::vector<Complex> b(g.size());
      for_each_mode(g, [&](const Mode& md) {
        if (md.xi2 == 0.0 || g.is_nyquist(md.index[j])) return;
        b[md.flat] = Complex(0.0, md.xi[j] / md.xi2) * src[md.flat];
      });
      blocks.push_back(std::move(b));
    }
  }
  out.value = lq_from_blocks(g, blocks, r);
  return out;
}

NegativeNorm negative_norm_surrogate(const VectorField& f, double r) {
  return negative_norm_surrogate(to_spectral(f), r);
}

double sobolev_exponent_s(int n, double r) {
  if (!(r < n + 1.0)) throw std::invalid_argument("sobolev_exponent_s: r must be below n+1");
  return (n + 1.0) * r / (n + 1.0 - r);
}

double lambda_norm(const SpectralField& v, double lambda, double q, double r, int n) {
  const double s = sobolev_exponent_s(n, r);
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda_norm: lambda must be positive");
  return sobolev_seminorm(v, 2, q) + sobolev_seminorm(v, 1, r) + std::pow(lambda, 1.0 / (n + 1.0)) * lq_norm(v, s);
}

double lambda_norm(const VectorField& v, double lambda, double q, double r, int n) {
  return lambda_norm(to_spectral(v), lambda, q, r, n);
}

int default_time_samples(int max_mode) { return std::max(8, 4 * max_mode + 4); }

double bochner_lq(const TimePeriodicField& u, double q, int time_samples) {
  check_exponent(q, "bochner_lq");
  const int nt = time_samples > 0 ? time_samples : default_time_samples(u.max_mode());
  double acc = 0.0;
  for (int j = 0; j < nt; ++j) {
    const double t = u.period() * j / nt;
    acc += std::pow(lq_norm(u.at_time(t), q), q);
  }
  return std::pow(acc / nt, 1.0 / q);
}

double maxreg_norm(const TimePeriodicField& u, double q, int time_samples) {
  check_exponent(q, "maxreg_norm");
  const int nt = time_samples > 0 ? time_samples : default_time_samples(u.max_mode());
  double space = 0.0;
  double time = 0.0;
  for (int j = 0; j < nt; ++j) {
    const double t = u.period() * j / nt;
    space += std::pow(w2q_norm(u.at_time(t), q), q);
    if (u.max_mode() > 0) time += std::pow(lq_norm(u.derivative_at_time(t), q), q);
  }
  return std::pow(space / nt, 1.0 / q) + std::pow(time / nt, 1.0 / q);
}

double evaluate_norm(const NormRequest& req, const VectorField& f, int n) {
  req.validate();
  switch (req.kind) {
    case NormKind::Lq:
      return lq_norm(f, req.q_exponent);
    case NormKind::SeminormKq:
      return req.k_order == 0 ? lq_norm(f, req.q_exponent) : sobolev_seminorm(f, req.k_order, req.q_exponent);
    case NormKind::NegativeNorm1r:
      return negative_norm_surrogate(f, req.r_exponent).value;
    case NormKind::LambdaNorm:
      return lambda_norm(f, req.lambda, req.q_exponent, req.r_exponent, n);
    case NormKind::MaxRegNorm:
      break;
  }
  throw std::invalid_argument("evaluate_norm: MaxRegNorm needs a time-periodic field");
}

}  // namespace oseenlab
