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

#include "oseenlab/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "oseenlab/spectral.hpp"

namespace oseenlab {

void GridSpec::validate() const {
  if (dim != 2 && dim != 3) throw std::invalid_argument("GridSpec: dim must be 2 or 3");
  if (!(half_period > 0.0) || !std::isfinite(half_period)) {
    throw std::invalid_argument("GridSpec: half_period must be positive");
  }
  if (points < 2 || points % 2 != 0) {
    throw std::invalid_argument("GridSpec: points per axis must be even and >= 2");
  }
  if (!(dealias_fraction > 0.0 && dealias_fraction <= 1.0)) {
    throw std::invalid_argument("GridSpec: dealias_fraction must lie in (0, 1]");
  }
}

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* where) {
  if (!(a == b)) throw std::invalid_argument(std::string(where) + ": grid mismatch");
}

// ---------------------------------------------------------------------------

ScalarField::ScalarField(const GridSpec& grid) : grid_(grid), values_(grid.size(), 0.0) {
  grid_.validate();
}

ScalarField::ScalarField(const GridSpec& grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  grid_.validate();
  if (values_.size() != grid_.size()) throw std::invalid_argument("ScalarField: size mismatch");
}

bool ScalarField::all_finite() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

VectorField::VectorField(const GridSpec& grid)
    : grid_(grid), comps_(static_cast<std::size_t>(grid.dim), std::vector<double>(grid.size(), 0.0)) {
  grid_.validate();
}

bool VectorField::all_finite() const noexcept {
  for (const auto& c : comps_) {
    for (double v : c) {
      if (!std::isfinite(v)) return false;
    }
  }
  return true;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  require_same_grid(grid_, o.grid_, "VectorField::operator+=");
  for (std::size_t c = 0; c < comps_.size(); ++c) {
    for (std::size_t i = 0; i < comps_[c].size(); ++i) comps_[c][i] += o.comps_[c][i];
  }
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  require_same_grid(grid_, o.grid_, "VectorField::operator-=");
  for (std::size_t c = 0; c < comps_.size(); ++c) {
    for (std::size_t i = 0; i < comps_[c].size(); ++i) comps_[c][i] -= o.comps_[c][i];
  }
  return *this;
}

VectorField& VectorField::operator*=(double a) {
  for (auto& c : comps_) {
    for (double& v : c) v *= a;
  }
  return *this;
}

VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
VectorField operator*(double s, VectorField a) { return a *= s; }

// ---------------------------------------------------------------------------

SpectralField::SpectralField(const GridSpec& grid, int components)
    : grid_(grid),
      blocks_(static_cast<std::size_t>(components), std::vector<Complex>(grid.size(), Complex{})) {
  grid_.validate();
  if (components < 1) throw std::invalid_argument("SpectralField: need at least one component");
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
  require_same_grid(grid_, o.grid_, "SpectralField::operator+=");
  if (o.components() != components()) throw std::invalid_argument("SpectralField: component mismatch");
  for (std::size_t c = 0; c < blocks_.size(); ++c) {
    for (std::size_t i = 0; i < blocks_[c].size(); ++i) blocks_[c][i] += o.blocks_[c][i];
  }
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
  require_same_grid(grid_, o.grid_, "SpectralField::operator-=");
  if (o.components() != components()) throw std::invalid_argument("SpectralField: component mismatch");
  for (std::size_t c = 0; c < blocks_.size(); ++c) {
    for (std::size_t i = 0; i < blocks_[c].size(); ++i) blocks_[c][i] -= o.blocks_[c][i];
  }
  return *this;
}

SpectralField& SpectralField::operator*=(Complex a) {
  for (auto& b : blocks_) {
    for (auto& v : b) v *= a;
  }
  return *this;
}

double SpectralField::hermitian_defect() const {
  double worst = 0.0;
  for (const auto& b : blocks_) {
    for_each_mode(grid_, [&](const Mode& md) {
      const std::size_t mirror = grid_.flat(grid_.index_of(-md.m[0]), grid_.dim > 1 ? grid_.index_of(-md.m[1]) : 0,
                                            grid_.dim > 2 ? grid_.index_of(-md.m[2]) : 0);
      worst = std::max(worst, std::abs(b[mirror] - std::conj(b[md.flat])));
    });
  }
  return worst;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(Complex s, SpectralField a) { return a *= s; }

// ---------------------------------------------------------------------------

TimePeriodicField::TimePeriodicField(const GridSpec& grid, int components, double period, int max_mode)
    : grid_(grid), components_(components), period_(period), max_mode_(max_mode) {
  if (!(period > 0.0)) throw std::invalid_argument("TimePeriodicField: period must be positive");
  if (max_mode < 0) throw std::invalid_argument("TimePeriodicField: max_mode must be >= 0");
  modes_.assign(static_cast<std::size_t>(2 * max_mode + 1), SpectralField(grid, components));
}

double TimePeriodicField::omega(int k) const noexcept { return 2.0 * std::numbers::pi * k / period_; }

SpectralField TimePeriodicField::at_time(double t) const {
  SpectralField out(grid_, components_);
  for (int k = -max_mode_; k <= max_mode_; ++k) {
    const Complex phase = std::polar(1.0, omega(k) * t);
    const SpectralField& mk = mode(k);
    for (int c = 0; c < components_; ++c) {
      auto dst = out.block(c);
      auto src = mk.block(c);
      for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += phase * src[i];
    }
  }
  return out;
}

SpectralField TimePeriodicField::derivative_at_time(double t) const {
  SpectralField out(grid_, components_);
  for (int k = -max_mode_; k <= max_mode_; ++k) {
    if (k == 0) continue;
    const Complex factor = Complex(0.0, omega(k)) * std::polar(1.0, omega(k) * t);
    const SpectralField& mk = mode(k);
    for (int c = 0; c < components_; ++c) {
      auto dst = out.block(c);
      auto src = mk.block(c);
      for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += factor * src[i];
    }
  }
  return out;
}

TimePeriodicField& TimePeriodicField::operator+=(const TimePeriodicField& o) {
  if (o.max_mode_ != max_mode_ || o.period_ != period_) {
    throw std::invalid_argument("TimePeriodicField: period/mode mismatch");
  }
  for (std::size_t i = 0; i < modes_.size(); ++i) modes_[i] += o.modes_[i];
  return *this;
}

TimePeriodicField& TimePeriodicField::operator-=(const TimePeriodicField& o) {
  if (o.max_mode_ != max_mode_ || o.period_ != period_) {
    throw std::invalid_argument("TimePeriodicField: period/mode mismatch");
  }
  for (std::size_t i = 0; i < modes_.size(); ++i) modes_[i] -= o.modes_[i];
  return *this;
}

TimePeriodicField& TimePeriodicField::operator*=(double a) {
  for (auto& m : modes_) m *= a;
  return *this;
}

TimePeriodicField operator+(TimePeriodicField a, const TimePeriodicField& b) { return a += b; }
TimePeriodicField operator-(TimePeriodicField a, const TimePeriodicField& b) { return a -= b; }

double TimePeriodicField::hermitian_defect() const {
  double worst = 0.0;
  for (int k = 0; k <= max_mode_; ++k) {
    const SpectralField& pos = mode(k);
    const SpectralField& neg = mode(-k);
    for (int c = 0; c < components_; ++c) {
      auto p = pos.block(c);
      auto n = neg.block(c);
      for_each_mode(grid_, [&](const Mode& md) {
        const std::size_t mirror =
            grid_.flat(grid_.index_of(-md.m[0]), grid_.dim > 1 ? grid_.index_of(-md.m[1]) : 0,
                       grid_.dim > 2 ? grid_.index_of(-md.m[2]) : 0);
        worst = std::max(worst, std::abs(n[mirror] - std::conj(p[md.flat])));
      });
    }
  }
  return worst;
}

TimePeriodicField TimePeriodicField::constant(const SpectralField& steady, double period, int max_mode) {
  TimePeriodicField out(steady.grid(), steady.components(), period, max_mode);
  out.mode(0) = steady;
  return out;
}

TimePeriodicField TimePeriodicField::from_samples(const std::vector<SpectralField>& samples, double period,
                                                  int max_mode) {
  if (samples.empty()) throw std::invalid_argument("TimePeriodicField::from_samples: no samples");
  const int nt = static_cast<int>(samples.size());
  if (nt < 2 * max_mode + 1) {
    throw std::invalid_argument("TimePeriodicField::from_samples: need at least 2K+1 samples");
  }
  const GridSpec& g = samples.front().grid();
  const int nc = samples.front().components();
  TimePeriodicField out(g, nc, period, max_mode);
  for (int k = -max_mode; k <= max_mode; ++k) {
    SpectralField& mk = out.mode(k);
    for (int j = 0; j < nt; ++j) {
      const Complex phase = std::polar(1.0 / nt, -2.0 * std::numbers::pi * k * j / nt);
      for (int c = 0; c < nc; ++c) {
        auto dst = mk.block(c);
        auto src = samples[static_cast<std::size_t>(j)].block(c);
        for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += phase * src[i];
      }
    }
  }
  return out;
}

}  // namespace oseenlab
