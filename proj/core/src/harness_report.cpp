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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

#include "oseenlab/csv.hpp"
#include "oseenlab/harness.hpp"

namespace oseenlab {

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

namespace {

void check_band(const GridSpec& grid, int min_mode, int max_mode) {
  grid.validate();
  if (min_mode < 1 || max_mode < min_mode) throw std::invalid_argument("random field: need 1 <= min_mode <= max_mode");
  if (max_mode > grid.cutoff()) throw std::invalid_argument("random field: max_mode exceeds the dealiasing cutoff");
}

// Visits integer vectors with min <= |m|_inf <= max in a fixed order that
// does not depend on the grid size.
template <class Fn>
void for_each_band_mode(int dim, int min_mode, int max_mode, bool half_space, Fn&& fn) {
  const int hi2 = dim > 2 ? max_mode : 0;
  for (int a = -max_mode; a <= max_mode; ++a) {
    for (int b = -max_mode; b <= max_mode; ++b) {
      for (int c = -hi2; c <= hi2; ++c) {
        const std::array<int, 3> m{a, b, c};
        const int inf = std::max({std::abs(a), std::abs(b), std::abs(c)});
        if (inf < min_mode || inf > max_mode) continue;
        if (half_space) {
          const int lead = a != 0 ? a : (b != 0 ? b : c);
          if (lead < 0) continue;
        }
        fn(m);
      }
    }
  }
}

std::size_t flat_of(const GridSpec& g, const std::array<int, 3>& m) {
  return g.flat(g.index_of(m[0]), g.dim > 1 ? g.index_of(m[1]) : 0, g.dim > 2 ? g.index_of(m[2]) : 0);
}

std::array<Complex, 3> draw_vector(std::mt19937_64& rng, std::normal_distribution<double>& nd, int comps,
                                   const std::array<int, 3>* project_on) {
  std::array<Complex, 3> a{};
  for (int c = 0; c < comps; ++c) {
    const double re = nd(rng);
    const double im = nd(rng);
    a[c] = {re, im};
  }
  if (project_on) {
    const auto& m = *project_on;
    double m2 = 0.0;
    Complex dot{};
    for (int c = 0; c < comps; ++c) {
      m2 += double(m[c]) * m[c];
      dot += double(m[c]) * a[c];
    }
    for (int c = 0; c < comps; ++c) a[c] -= dot * (double(m[c]) / m2);
  }
  return a;
}

SpectralField hermitian_field(const GridSpec& grid, int comps, bool solenoidal, int min_mode, int max_mode,
                              std::uint64_t seed, std::uint64_t stream) {
  check_band(grid, min_mode, max_mode);
  std::mt19937_64 rng(stream_seed(seed, stream));
  std::normal_distribution<double> nd;
  SpectralField out(grid, comps);
  double energy = 0.0;
  for_each_band_mode(grid.dim, min_mode, max_mode, true, [&](const std::array<int, 3>& m) {
    const auto a = draw_vector(rng, nd, comps, solenoidal ? &m : nullptr);
    const std::size_t p = flat_of(grid, m);
    const std::size_t q = flat_of(grid, {-m[0], -m[1], -m[2]});
    for (int c = 0; c < comps; ++c) {
      out.block(c)[p] = a[c];
      out.block(c)[q] = std::conj(a[c]);
      energy += 2.0 * std::norm(a[c]);
    }
  });
  if (!(energy > 0.0)) throw std::invalid_argument("random field: empty band");
  out *= Complex(1.0 / std::sqrt(energy));
  return out;
}

}  // namespace

SpectralField random_solenoidal(const GridSpec& grid, int min_mode, int max_mode, std::uint64_t seed,
                                std::uint64_t stream) {
  return hermitian_field(grid, grid.dim, true, min_mode, max_mode, seed, stream);
}

SpectralField random_scalar(const GridSpec& grid, int min_mode, int max_mode, std::uint64_t seed,
                            std::uint64_t stream) {
  return hermitian_field(grid, 1, false, min_mode, max_mode, seed, stream);
}

TimePeriodicField random_oscillatory(const GridSpec& grid, int min_mode, int max_mode, double period, int K,
                                     std::uint64_t seed, std::uint64_t stream) {
  check_band(grid, min_mode, max_mode);
  if (K < 1) throw std::invalid_argument("random_oscillatory: need K >= 1");
  std::mt19937_64 rng(stream_seed(seed, stream));
  std::normal_distribution<double> nd;
  TimePeriodicField out(grid, grid.dim, period, K);
  double energy = 0.0;
  for (int k = 1; k <= K; ++k) {
    for_each_band_mode(grid.dim, min_mode, max_mode, false, [&](const std::array<int, 3>& m) {
      const auto a = draw_vector(rng, nd, grid.dim, &m);
      const std::size_t p = flat_of(grid, m);
      const std::size_t q = flat_of(grid, {-m[0], -m[1], -m[2]});
      for (int c = 0; c < grid.dim; ++c) {
        out.mode(k).block(c)[p] = a[c];
        out.mode(-k).block(c)[q] = std::conj(a[c]);
        energy += 2.0 * std::norm(a[c]);
      }
    });
  }
  out *= 1.0 / std::sqrt(energy);
  return out;
}

// ---------------------------------------------------------------- fits

namespace {

std::pair<double, double> ols(const std::vector<double>& lx, const std::vector<double>& ly, std::size_t skip) {
  double n = 0, sx = 0, sy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    if (i == skip) continue;
    n += 1;
    sx += lx[i];
    sy += ly[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    if (i == skip) continue;
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  const double slope = sxx > 0 ? sxy / sxx : 0.0;
  return {slope, my - slope * mx};
}

}  // namespace

LogLogFit fit_loglog(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("fit_loglog: size mismatch");
  if (x.size() < 2) throw std::invalid_argument("fit_loglog: need at least two points");
  std::vector<double> lx(x.size()), ly(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0) || !std::isfinite(x[i]) || !std::isfinite(y[i])) {
      throw std::invalid_argument("fit_loglog: data must be positive and finite");
    }
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  LogLogFit fit;
  fit.points = static_cast<int>(x.size());
  std::tie(fit.slope, fit.intercept) = ols(lx, ly, lx.size());
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / ly.size();
  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double e = ly[i] - (fit.slope * lx[i] + fit.intercept);
    ss_res += e * e;
    ss_tot += (ly[i] - my) * (ly[i] - my);
  }
  fit.r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  if (x.size() >= 3) {
    for (std::size_t i = 0; i < lx.size(); ++i) {
      fit.leverage = std::max(fit.leverage, std::abs(ols(lx, ly, i).first - fit.slope));
    }
  }
  return fit;
}

// ---------------------------------------------------------------- reports

bool ExperimentReport::passed() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.passed; });
}

std::vector<double> ExperimentReport::column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw std::out_of_range("no column '" + name + "'");
  const auto c = static_cast<std::size_t>(it - header.begin());
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.at(c));
  return out;
}

double ExperimentReport::value(const std::string& name) const {
  for (const auto& [k, v] : summary)
    if (k == name) return v;
  throw std::out_of_range("no summary value '" + name + "'");
}

void ExperimentReport::check(const std::string& what, bool ok, const std::string& detail) {
  assertions.push_back({what, ok, detail});
}

void emit_csv(const ExperimentReport& report, std::ostream& out) {
  CsvWriter w(out, report.header);
  for (const auto& r : report.rows) w.row(std::span<const double>(r));
}

void emit_csv(const ExperimentReport& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("emit_csv: cannot open " + path.string());
  emit_csv(report, out);
  out.flush();
  if (!out) throw std::runtime_error("emit_csv: write failed for " + path.string());
}

void emit_summary_csv(const ExperimentReport& report, std::ostream& out) {
  out << "key,value,detail\n";
  for (const auto& [k, v] : report.summary) out << k << ',' << format_double(v) << ",\n";
  for (const auto& a : report.assertions) {
    std::string detail = a.detail;
    std::replace(detail.begin(), detail.end(), ',', ';');
    out << "assert:" << a.name << ',' << (a.passed ? "PASS" : "FAIL") << ',' << detail << '\n';
  }
}

void emit_dat(const ExperimentReport& report, std::ostream& out) {
  out << '#';
  for (const auto& h : report.header) out << ' ' << h;
  out << '\n';
  for (const auto& r : report.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << format_double(r[i]);
    out << '\n';
  }
}

}  // namespace oseenlab
