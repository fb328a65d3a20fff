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

#include <span>
#include <vector>

#include "oseenlab/field.hpp"

namespace oseenlab {

/// Forward transform of each component, normalized so that a constant field c
/// has coefficient c at xi = 0 and sum |c|^2 equals the grid mean of |f|^2.
SpectralField to_spectral(const VectorField& field);
SpectralField to_spectral(const ScalarField& field);

/// Inverse transform; the imaginary part (round-off for Hermitian input) is dropped.
VectorField from_spectral(const SpectralField& field);
ScalarField scalar_from_spectral(const SpectralField& field, int component = 0);

/// Low-level single-block transforms used by the time-periodic code paths.
void forward_transform(const GridSpec& grid, std::span<const Complex> in, std::span<Complex> out);
void inverse_transform(const GridSpec& grid, std::span<const Complex> in, std::span<Complex> out);

/// Multiplies by i*xi_axis (axis is 1-based). The Nyquist index of that axis
/// is mapped to zero. Throws std::invalid_argument for axis outside 1..dim.
SpectralField spectral_derivative(const SpectralField& field, int axis);

/// Zeroes every coefficient with some |m| above grid.cutoff().
SpectralField dealias(SpectralField field);

/// Zeroes every coefficient that has a Nyquist index on some axis.
SpectralField drop_nyquist(SpectralField field);

/// Sets the xi = 0 coefficient of every block to zero.
SpectralField remove_mean(SpectralField field);

/// Pointwise product with both factors and the result truncated to the
/// retained modes. Vector fields multiply componentwise.
ScalarField dealiased_product(const ScalarField& a, const ScalarField& b);
VectorField dealiased_product(const VectorField& a, const VectorField& b);

/// (a . grad) b with the same truncation, for vector coefficient fields a, b.
SpectralField convective_term(const SpectralField& a, const SpectralField& b);

/// Physical-space products on samples already truncated by the caller.
/// a_phys, grad_b_phys are real arrays; used where the same factors are
/// reused across several products.
struct PhysicalVector {
  GridSpec grid;
  std::vector<std::vector<double>> comps;
};
struct PhysicalGradient {
  GridSpec grid;
  // grad[i][j] = d_j b_i
  std::vector<std::vector<std::vector<double>>> grad;
};
PhysicalVector to_physical_truncated(const SpectralField& a);
PhysicalGradient gradient_physical_truncated(const SpectralField& b);
/// Truncated spectral coefficients of (a . grad) b from physical factors.
SpectralField convective_from_physical(const PhysicalVector& a, const PhysicalGradient& grad_b);

SpectralField divergence(const SpectralField& field);
SpectralField gradient(const SpectralField& scalar);
SpectralField laplacian(const SpectralField& field);

/// max |c| over all blocks.
double max_abs(const SpectralField& field);

}  // namespace oseenlab
