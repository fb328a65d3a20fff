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

#include <exception>
#include <string>
#include <vector>

#include "oseenlab/harness.hpp"
#include "oseenlab/oseen.hpp"

namespace oseenlab::detail {

// OpenMP loop over [0, n); the first exception is rethrown after the loop.
template <class I, class F>
void parallel_for(I n, F&& body) {
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (I i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(oseenlab_parallel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

/// Largest |m| of random fields for this configuration.
int field_band(const ExperimentConfig& cfg, const GridSpec& grid);

/// Gaussian bump at the box center along (e_1 + e_2)/sqrt(2), reduced to the
/// retained non-Nyquist modes, zero mean.
SpectralField bump_forcing(const GridSpec& grid, double width);

/// Gradient of each time mode of a scalar.
TimePeriodicField gradient(const TimePeriodicField& scalar);

/// (a . grad) b for time-periodic factors, products formed on time samples
/// and kept up to max_mode.
TimePeriodicField convective(const TimePeriodicField& a, const TimePeriodicField& b, int max_mode);

/// Plancherel value of (1/T int ||u||_2^2 dt)^(1/2).
double plancherel_l2(const TimePeriodicField& u);

/// Time derivative, mode by mode.
TimePeriodicField time_derivative(const TimePeriodicField& u);

double rel_diff(double a, double b);

struct BilinearSample {
  double A1 = 0, B1 = 0, A2 = 0, B2 = 0;  // ||v||_lambda = A + lambda^{1/(n+1)} B
  double X1 = 0, X2 = 0;                  // maxreg norms of w_1, w_2
  std::array<double, 6> num{};            // lambda-independent numerators
};

/// Norms of pair `index` of the ensemble drawn from (seed, band) on `grid`.
BilinearSample bilinear_sample(const GridSpec& grid, int band, double period, int K, double q, double r,
                               std::uint64_t seed, int index);

struct BilinearFit {
  std::vector<double> lambdas;
  std::array<std::vector<double>, 6> sup;  // sup over samples of the unweighted ratio
  std::array<double, 6> exponent{};        // fitted, raw
  std::array<double, 6> constant{};        // with the exponent clamped to >= 0
  std::array<double, 6> leverage{};
  double crossover = 0.0;
};

/// Sup ratios, fitted exponents and constants over `count` samples.
BilinearFit fit_bilinear(const std::vector<BilinearSample>& samples, std::size_t count,
                         const std::vector<double>& lambdas, int n);

}  // namespace oseenlab::detail
