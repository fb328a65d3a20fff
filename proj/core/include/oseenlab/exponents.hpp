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

#include <optional>
#include <string>
#include <vector>

namespace oseenlab {

struct ExponentMDelta {
  int M = 0;
  int delta = 0;
};

/// Right-hand-side weight exponents of the steady linear estimate:
///   M = 2 for (n+1)/n < r <= n/(n-1), 0 for n/(n-1) < r < n, 1 for n <= r < n+1;
///   delta = 1 iff n = r = 2.
/// Throws std::invalid_argument for r outside ((n+1)/n, n+1) or n < 2.
ExponentMDelta exponents_mdelta(int n, double r);

/// theta = q s / (n (q - s) + q s), s = (n+1) r / (n+1-r). Both algebraic forms
/// are evaluated and must agree; throws std::invalid_argument when s > q.
double theta_exponent(int n, double q, double r);
/// The two forms separately (no precondition check), for cross-checking.
double theta_form_s(int n, double q, double r);
double theta_form_r(int n, double q, double r);

enum class Problem { SteadyNS, TimePeriodicNS, LinearFull };

struct Admissibility {
  bool ok = true;
  std::vector<std::string> violated;
};

/// Evaluates every inequality of the condition set for the given problem and
/// lists the ones that fail. Exponents outside (1, inf) are reported as a
/// domain violation.
Admissibility admissibility(int n, double q, double r, Problem problem);

/// (lo, hi) of the q-window for TimePeriodicNS: lo = max((n+2)/3, n(n+1)/(n^2-n-1)) open, hi = n+1 closed.
std::pair<double, double> timeperiodic_q_window(int n);

struct OpenInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const noexcept { return x > lo && x < hi; }
};

/// ( max(1, (n+1)/(n+1-M)), (n+1)/max{theta, zeta, M+eta} ). Throws
/// std::domain_error unless max{theta, zeta, M+eta} < n+1-M.
OpenInterval gamma_interval(int n, int M, double theta, double zeta, double eta);

/// Everything above for one (n, q, r) configuration.
struct ExponentProfile {
  int n = 3;
  double q = 4.0;
  double r = 2.0;
  double s = 4.0;
  int M = 0;
  int delta = 0;
  /// Full-norm interpolation exponent; empty when s > q.
  std::optional<double> theta;
  /// Bilinear-estimate exponents; empty until fitted.
  std::optional<double> theta_bilinear;
  std::optional<double> eta;
  std::optional<double> zeta;
  std::optional<OpenInterval> gamma;
};

/// Fills s, M, delta, theta. Bilinear exponents are taken from the arguments
/// when given; gamma is computed when all three are known.
ExponentProfile make_profile(int n, double q, double r, std::optional<double> theta_bilinear = {},
                             std::optional<double> eta = {}, std::optional<double> zeta = {});

/// Conservative bilinear exponents used when no fit is available.
inline constexpr double kFallbackEta = 2.0;
inline constexpr double kFallbackZeta = 1.0 - 1e-6;

}  // namespace oseenlab
