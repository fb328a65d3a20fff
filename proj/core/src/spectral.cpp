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

#include "oseenlab/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace oseenlab {
namespace {

// FFTW planning is not thread-safe; execution with fftw_execute_dft is.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  fftw_plan get(const GridSpec& g, int sign) {
    const auto key = std::make_tuple(g.dim, g.points, sign);
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    std::vector<Complex> a(g.size()), b(g.size());
    int n[3] = {g.points, g.points, g.points};
    fftw_plan p = fftw_plan_dft(g.dim, n, reinterpret_cast<fftw_complex*>(a.data()),
                                reinterpret_cast<fftw_complex*>(b.data()), sign,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (p == nullptr) throw std::runtime_error("FFTW planning failed");
    plans_.emplace(key, p);
    return p;
  }

  ~PlanCache() {
    for (auto& [key, p] : plans_) fftw_destroy_plan(p);
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

void execute(const GridSpec& g, int sign, std::span<const Complex> in, std::span<Complex> out) {
  if (in.size() != g.size() || out.size() != g.size()) throw std::invalid_argument("transform: size mismatch");
  fftw_plan p = PlanCache::instance().get(g, sign);
  if (in.data() == out.data()) {
    std::vector<Complex> tmp(in.begin(), in.end());
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(tmp.data()), reinterpret_cast<fftw_complex*>(out.data()));
  } else {
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in.data())),
                     reinterpret_cast<fftw_complex*>(out.data()));
  }
}

std::size_t mirror_flat(const GridSpec& g, const Mode& md) {
  return g.flat(g.index_of(-md.m[0]), g.dim > 1 ? g.index_of(-md.m[1]) : 0, g.dim > 2 ? g.index_of(-md.m[2]) : 0);
}

}  // namespace

void forward_transform(const GridSpec& grid, std::span<const Complex> in, std::span<Complex> out) {
  execute(grid, FFTW_FORWARD, in, out);
  const double scale = 1.0 / static_cast<double>(grid.size());
  for (auto& v : out) v *= scale;
}

void inverse_transform(const GridSpec& grid, std::span<const Complex> in, std::span<Complex> out) {
  execute(grid, FFTW_BACKWARD, in, out);
}

namespace {

void real_forward(const GridSpec& g, std::span<const double> in, std::span<Complex> out) {
  std::vector<Complex> buf(in.begin(), in.end());
  forward_transform(g, buf, out);
  // Exact Hermitian symmetry for real input: average c(xi) with conj(c(-xi)).
  std::vector<Complex> sym(out.begin(), out.end());
  for_each_mode(g, [&](const Mode& md) { out[md.flat] = 0.5 * (sym[md.flat] + std::conj(sym[mirror_flat(g, md)])); });
}

void real_inverse(const GridSpec& g, std::span<const Complex> in, std::span<double> out) {
  std::vector<Complex> buf(g.size());
  inverse_transform(g, in, buf);
  for (std::size_t i = 0; i < buf.size(); ++i) out[i] = buf[i].real();
}

}  // namespace

SpectralField to_spectral(const VectorField& field) {
  SpectralField out(field.grid(), field.components());
  for (int c = 0; c < field.components(); ++c) real_forward(field.grid(), field.component(c), out.block(c));
  return out;
}

SpectralField to_spectral(const ScalarField& field) {
  SpectralField out(field.grid(), 1);
  real_forward(field.grid(), field.values(), out.block(0));
  return out;
}

VectorField from_spectral(const SpectralField& field) {
  if (field.components() != field.grid().dim) {
    throw std::invalid_argument("from_spectral: expected dim components");
  }
  VectorField out(field.grid());
  for (int c = 0; c < field.components(); ++c) real_inverse(field.grid(), field.block(c), out.component(c));
  return out;
}

ScalarField scalar_from_spectral(const SpectralField& field, int component) {
  ScalarField out(field.grid());
  real_inverse(field.grid(), field.block(component), out.values());
  return out;
}

SpectralField spectral_derivative(const SpectralField& field, int axis) {
  const GridSpec& g = field.grid();
  if (axis < 1 || axis > g.dim) throw std::invalid_argument("spectral_derivative: invalid axis");
  const int a = axis - 1;
  SpectralField out(g, field.components());
  for (int c = 0; c < field.components(); ++c) {
    auto src = field.block(c);
    auto dst = out.block(c);
    for_each_mode(g, [&](const Mode& md) {
      dst[md.flat] = g.is_nyquist(md.index[a]) ? Complex{} : Complex(0.0, md.xi[a]) * src[md.flat];
    });
  }
  return out;
}

SpectralField dealias(SpectralField field) {
  const GridSpec& g = field.grid();
  for (int c = 0; c < field.components(); ++c) {
    auto b = field.block(c);
    for_each_mode(g, [&](const Mode& md) {
      if (!md.retained) b[md.flat] = Complex{};
    });
  }
  return field;
}

SpectralField drop_nyquist(SpectralField field) {
  const GridSpec& g = field.grid();
  for (int c = 0; c < field.components(); ++c) {
    auto b = field.block(c);
    for_each_mode(g, [&](const Mode& md) {
      if (md.nyquist) b[md.flat] = Complex{};
    });
  }
  return field;
}

SpectralField remove_mean(SpectralField field) {
  for (int c = 0; c < field.components(); ++c) field.block(c)[0] = Complex{};
  return field;
}

ScalarField dealiased_product(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid(), b.grid(), "dealiased_product");
  const ScalarField ta = scalar_from_spectral(dealias(to_spectral(a)));
  const ScalarField tb = scalar_from_spectral(dealias(to_spectral(b)));
  ScalarField prod(a.grid());
  for (std::size_t i = 0; i < prod.values().size(); ++i) prod[i] = ta[i] * tb[i];
  return scalar_from_spectral(dealias(to_spectral(prod)));
}

VectorField dealiased_product(const VectorField& a, const VectorField& b) {
  require_same_grid(a.grid(), b.grid(), "dealiased_product");
  const VectorField ta = from_spectral(dealias(to_spectral(a)));
  const VectorField tb = from_spectral(dealias(to_spectral(b)));
  VectorField prod(a.grid());
  for (int c = 0; c < prod.components(); ++c) {
    auto p = prod.component(c);
    auto x = ta.component(c);
    auto y = tb.component(c);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = x[i] * y[i];
  }
  return from_spectral(dealias(to_spectral(prod)));
}

PhysicalVector to_physical_truncated(const SpectralField& a) {
  const SpectralField ta = dealias(a);
  PhysicalVector out{a.grid(), {}};
  out.comps.resize(static_cast<std::size_t>(a.components()), std::vector<double>(a.grid().size()));
  for (int c = 0; c < a.components(); ++c) real_inverse(a.grid(), ta.block(c), out.comps[static_cast<std::size_t>(c)]);
  return out;
}

PhysicalGradient gradient_physical_truncated(const SpectralField& b) {
  const GridSpec& g = b.grid();
  const SpectralField tb = dealias(b);
  PhysicalGradient out{g, {}};
  out.grad.assign(static_cast<std::size_t>(b.components()),
                  std::vector<std::vector<double>>(static_cast<std::size_t>(g.dim), std::vector<double>(g.size())));
  for (int j = 1; j <= g.dim; ++j) {
    const SpectralField d = spectral_derivative(tb, j);
    for (int i = 0; i < b.components(); ++i) {
      real_inverse(g, d.block(i), out.grad[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)]);
    }
  }
  return out;
}

SpectralField convective_from_physical(const PhysicalVector& a, const PhysicalGradient& grad_b) {
  const GridSpec& g = a.grid;
  require_same_grid(g, grad_b.grid, "convective_term");
  const int nc = static_cast<int>(grad_b.grad.size());
  SpectralField out(g, nc);
  std::vector<double> acc(g.size());
  std::vector<Complex> buf(g.size());
  for (int i = 0; i < nc; ++i) {
    std::fill(acc.begin(), acc.end(), 0.0);
    for (int j = 0; j < g.dim; ++j) {
      const auto& aj = a.comps[static_cast<std::size_t>(j)];
      const auto& dj = grad_b.grad[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      for (std::size_t p = 0; p < acc.size(); ++p) acc[p] += aj[p] * dj[p];
    }
    real_forward(g, acc, out.block(i));
  }
  return dealias(std::move(out));
}

SpectralField convective_term(const SpectralField& a, const SpectralField& b) {
  require_same_grid(a.grid(), b.grid(), "convective_term");
  if (a.components() != a.grid().dim) throw std::invalid_argument("convective_term: advecting field must be a vector");
  return convective_from_physical(to_physical_truncated(a), gradient_physical_truncated(b));
}

SpectralField divergence(const SpectralField& field) {
  const GridSpec& g = field.grid();
  if (field.components() != g.dim) throw std::invalid_argument("divergence: expected a vector field");
  SpectralField out(g, 1);
  auto dst = out.block(0);
  for (int a = 1; a <= g.dim; ++a) {
    const SpectralField d = spectral_derivative(field, a);
    auto src = d.block(a - 1);
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
  }
  return out;
}

SpectralField gradient(const SpectralField& scalar) {
  const GridSpec& g = scalar.grid();
  if (scalar.components() != 1) throw std::invalid_argument("gradient: expected a scalar field");
  SpectralField out(g, g.dim);
  for (int a = 1; a <= g.dim; ++a) {
    const SpectralField d = spectral_derivative(scalar, a);
    std::copy(d.block(0).begin(), d.block(0).end(), out.block(a - 1).begin());
  }
  return out;
}

SpectralField laplacian(const SpectralField& field) {
  SpectralField out(field.grid(), field.components());
  for (int c = 0; c < field.components(); ++c) {
    auto src = field.block(c);
    auto dst = out.block(c);
    for_each_mode(field.grid(), [&](const Mode& md) { dst[md.flat] = -md.xi2 * src[md.flat]; });
  }
  return out;
}

double max_abs(const SpectralField& field) {
  double m = 0.0;
  for (int c = 0; c < field.components(); ++c) {
    for (const Complex& v : field.block(c)) m = std::max(m, std::abs(v));
  }
  return m;
}

}  // namespace oseenlab
