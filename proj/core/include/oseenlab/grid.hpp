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

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>

namespace oseenlab {

/// Uniform periodic box [0, 2*pi*L)^dim with N points per axis.
///
/// Wavenumbers along each axis are m / L for m in {-N/2+1, ..., N/2}; the
/// index N/2 is the Nyquist mode. A two-dimensional grid is stored as an
/// N x N x 1 block so that loops can be written once for both dimensions.
struct GridSpec {
  int dim = 3;
  double half_period = 1.0;
  int points = 32;
  double dealias_fraction = 2.0 / 3.0;

  /// Throws std::invalid_argument on a malformed grid.
  void validate() const;

  std::size_t size() const noexcept {
    std::size_t s = 1;
    for (int a = 0; a < dim; ++a) s *= static_cast<std::size_t>(points);
    return s;
  }
  double length() const noexcept { return 2.0 * std::numbers::pi * half_period; }
  double spacing() const noexcept { return length() / points; }
  double volume() const noexcept { return std::pow(length(), dim); }
  double cell_volume() const noexcept { return volume() / static_cast<double>(size()); }

  /// Largest retained |m| after dealiasing: floor(fraction * N / 2).
  int cutoff() const noexcept {
    return static_cast<int>(std::floor(dealias_fraction * points / 2.0 + 1e-12));
  }

  /// Signed integer mode of array index i in [0, N).
  int mode_of(int i) const noexcept { return i <= points / 2 ? i : i - points; }
  /// Array index of signed mode m (m taken modulo N).
  int index_of(int m) const noexcept { return ((m % points) + points) % points; }
  bool is_nyquist(int i) const noexcept { return i == points / 2; }
  double wavenumber(int i) const noexcept { return mode_of(i) / half_period; }
  double coordinate(int i) const noexcept { return i * spacing(); }

  /// Extent of storage axis a (1 for unused third axis in 2D).
  int extent(int a) const noexcept { return a < dim ? points : 1; }

  std::size_t flat(int i0, int i1, int i2) const noexcept {
    return (static_cast<std::size_t>(i0) * extent(1) + i1) * extent(2) + i2;
  }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Wave vector of one stored coefficient.
struct Mode {
  std::size_t flat = 0;
  std::array<int, 3> index{};
  std::array<int, 3> m{};     // signed integer modes
  std::array<double, 3> xi{};  // m / L
  double xi2 = 0.0;           // |xi|^2
  bool nyquist = false;       // any axis at N/2
  bool retained = true;       // every |m| <= cutoff
};

/// Visits every stored coefficient in row-major order.
template <class Fn>
void for_each_mode(const GridSpec& g, Fn&& fn) {
  const int cut = g.cutoff();
  Mode md;
  for (int i0 = 0; i0 < g.extent(0); ++i0) {
    for (int i1 = 0; i1 < g.extent(1); ++i1) {
      for (int i2 = 0; i2 < g.extent(2); ++i2) {
        md.index = {i0, i1, i2};
        md.xi2 = 0.0;
        md.nyquist = false;
        md.retained = true;
        for (int a = 0; a < 3; ++a) {
          if (a < g.dim) {
            md.m[a] = g.mode_of(md.index[a]);
            md.xi[a] = md.m[a] / g.half_period;
            md.nyquist = md.nyquist || g.is_nyquist(md.index[a]);
            md.retained = md.retained && std::abs(md.m[a]) <= cut;
          } else {
            md.m[a] = 0;
            md.xi[a] = 0.0;
          }
          md.xi2 += md.xi[a] * md.xi[a];
        }
        md.flat = g.flat(i0, i1, i2);
        fn(static_cast<const Mode&>(md));
      }
    }
  }
}

/// Visits every grid point with its coordinates.
template <class Fn>
void for_each_point(const GridSpec& g, Fn&& fn) {
  std::array<double, 3> x{};
  for (int i0 = 0; i0 < g.extent(0); ++i0) {
    x[0] = g.coordinate(i0);
    for (int i1 = 0; i1 < g.extent(1); ++i1) {
      x[1] = g.dim > 1 ? g.coordinate(i1) : 0.0;
      for (int i2 = 0; i2 < g.extent(2); ++i2) {
        x[2] = g.dim > 2 ? g.coordinate(i2) : 0.0;
        fn(g.flat(i0, i1, i2), static_cast<const std::array<double, 3>&>(x));
      }
    }
  }
}

}  // namespace oseenlab
