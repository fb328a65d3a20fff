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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "oseenlab/grid.hpp"

namespace oseenlab {

using Complex = std::complex<double>;

/// Real scalar on the grid (pressure, cut-off, single velocity component).
class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(const GridSpec& grid);
  ScalarField(const GridSpec& grid, std::vector<double> values);

  const GridSpec& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double& operator[](std::size_t i) noexcept { return values_[i]; }

  bool all_finite() const noexcept;

 private:
  GridSpec grid_;
  std::vector<double> values_;
};

/// Real vector field with grid.dim components.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(const GridSpec& grid);

  const GridSpec& grid() const noexcept { return grid_; }
  int components() const noexcept { return static_cast<int>(comps_.size()); }
  std::span<const double> component(int c) const noexcept { return comps_[c]; }
  std::span<double> component(int c) noexcept { return comps_[c]; }

  bool all_finite() const noexcept;

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  VectorField& operator*=(double a);

 private:
  GridSpec grid_;
  std::vector<std::vector<double>> comps_;
};

VectorField operator+(VectorField a, const VectorField& b);
VectorField operator-(VectorField a, const VectorField& b);
VectorField operator*(double s, VectorField a);

/// Fourier coefficients c(xi), f(x) = sum_xi c(xi) exp(i xi.x), one block per
/// component. A vector field carries dim blocks, a scalar field one.
class SpectralField {
 public:
  SpectralField() = default;
  SpectralField(const GridSpec& grid, int components);

  const GridSpec& grid() const noexcept { return grid_; }
  int components() const noexcept { return static_cast<int>(blocks_.size()); }
  std::span<const Complex> block(int c) const noexcept { return blocks_[c]; }
  std::span<Complex> block(int c) noexcept { return blocks_[c]; }

  SpectralField& operator+=(const SpectralField& o);
  SpectralField& operator-=(const SpectralField& o);
  SpectralField& operator*=(Complex a);

  /// max |c(-xi) - conj(c(xi))| over all blocks.
  double hermitian_defect() const;

 private:
  GridSpec grid_;
  std::vector<std::vector<Complex>> blocks_;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(Complex s, SpectralField a);

/// Finite Fourier series in time with period T:
///   u(t, x) = sum_{k=-K..K} u_k(x) exp(i omega_k t),  omega_k = 2 pi k / T.
/// Each u_k is stored by its spatial Fourier coefficients. A real signal has
/// u_{-k}(-xi) = conj(u_k(xi)).
class TimePeriodicField {
 public:
  TimePeriodicField() = default;
  TimePeriodicField(const GridSpec& grid, int components, double period, int max_mode);

  const GridSpec& grid() const noexcept { return grid_; }
  int components() const noexcept { return components_; }
  double period() const noexcept { return period_; }
  int max_mode() const noexcept { return max_mode_; }
  double omega(int k) const noexcept;

  const SpectralField& mode(int k) const { return modes_.at(static_cast<std::size_t>(k + max_mode_)); }
  SpectralField& mode(int k) { return modes_.at(static_cast<std::size_t>(k + max_mode_)); }

  /// Spatial coefficients of u(t).
  SpectralField at_time(double t) const;
  /// Spatial coefficients of du/dt(t).
  SpectralField derivative_at_time(double t) const;

  TimePeriodicField& operator+=(const TimePeriodicField& o);
  TimePeriodicField& operator-=(const TimePeriodicField& o);
  TimePeriodicField& operator*=(double a);

  /// max over k of the Hermitian defect between mode k and mode -k.
  double hermitian_defect() const;

  /// Field constant in time: mode 0 = steady, all others zero.
  static TimePeriodicField constant(const SpectralField& steady, double period, int max_mode);

  /// Builds modes |k| <= max_mode from uniform samples u(j T / Nt), Nt = samples.size().
  static TimePeriodicField from_samples(const std::vector<SpectralField>& samples, double period,
                                        int max_mode);

 private:
  GridSpec grid_;
  int components_ = 0;
  double period_ = 1.0;
  int max_mode_ = 0;
  std::vector<SpectralField> modes_;
};

TimePeriodicField operator+(TimePeriodicField a, const TimePeriodicField& b);
TimePeriodicField operator-(TimePeriodicField a, const TimePeriodicField& b);

/// Throws std::invalid_argument when grids differ.
void require_same_grid(const GridSpec& a, const GridSpec& b, const char* where);

}  // namespace oseenlab
