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

#include "oseenlab/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "oseenlab/norms.hpp"

namespace oseenlab {

ExponentMDelta exponents_mdelta(int n, double r) {
  if (n < 2) throw std::invalid_argument("exponents_mdelta: n must be >= 2");
  const double lo = (n + 1.0) / n;
  if (!(r > lo && r < n + 1.0)) throw std::invalid_argument("exponents_mdelta: r outside ((n+1)/n, n+1)");
  ExponentMDelta out;
  const double mid = static_cast<double>(n) / (n - 1.0);
  if (r <= mid) {
    out.M = 2;
  } else if (r < n) {
    out.M = 0;
  } else {
    out.M = 1;
  }
  out.delta = (n == 2 && r == 2.0) ? 1 : 0;
  return out;
}

double theta_form_s(int n, double q, double r) {
  const double s = (n + 1.0) * r / (n + 1.0 - r);
  return q * s / (n * (q - s) + q * s);
}

double theta_form_r(int n, double q, double r) {
  return (n + 1.0) * q * r / (n * (n + 1.0) * (q - r) + q * r);
}

double theta_exponent(int n, double q, double r) {
  const double s = sobolev_exponent_s(n, r);
  if (s > q) throw std::invalid_argument("theta_exponent: requires s <= q");
  const double a = theta_form_s(n, q, r);
  const double b = theta_form_r(n, q, r);
  if (std::abs(a - b) > 1e-12 * std::max(1.0, std::abs(a))) {
    throw std::logic_error("theta_exponent: algebraic forms disagree");
  }
  return std::clamp(a, 0.0, 1.0);
}

std::pair<double, double> timeperiodic_q_window(int n) {
  const double a = (n + 2.0) / 3.0;
  const double b = n * (n + 1.0) / (n * n - n - 1.0);
  return {std::max(a, b), n + 1.0};
}

namespace {

double upper_inv_r(int n) { return (n == 3 || n == 4) ? (n - 1.0) / n : n / (n + 1.0); }

class Checker {
 public:
  void require(bool cond, const std::string& what) {
    if (!cond) {
      result.ok = false;
      result.violated.push_back(what);
    }
  }
  Admissibility result;
};

}  // namespace

Admissibility admissibility(int n, double q, double r, Problem problem) {
  Checker c;
  c.require(q > 1.0 && std::isfinite(q), "domain: q in (1, inf)");
  c.require(r > 1.0 && std::isfinite(r), "domain: r in (1, inf)");
  const double iq = 1.0 / q;
  const double ir = 1.0 / r;
  switch (problem) {
    case Problem::LinearFull: {
      c.require(n >= 2, "n >= 2");
      c.require(r > (n + 1.0) / n && r < n + 1.0, "(n+1)/n < r < n+1");
      c.require(iq <= ir - 1.0 / (n + 1.0), "s <= q  (1/q <= 1/r - 1/(n+1))");
      break;
    }
    case Problem::SteadyNS: {
      c.require(n >= 3, "n >= 3");
      c.require(q >= n / 3.0, "q >= n/3");
      c.require(iq / 3.0 + 1.0 / (n + 1.0) <= ir, "1/(3q) + 1/(n+1) <= 1/r");
      c.require(2.0 * iq - 4.0 / n <= ir, "2/q - 4/n <= 1/r");
      c.require(2.0 / (n + 1.0) <= ir, "2/(n+1) <= 1/r");
      c.require(ir < upper_inv_r(n), "1/r < (n-1)/n (n=3,4) or n/(n+1) (n>=5)");
      break;
    }
    case Problem::TimePeriodicNS: {
      c.require(n >= 3, "n >= 3");
      c.require((n + 2.0) / 3.0 < q, "(n+2)/3 < q");
      c.require(q <= n + 1.0, "q <= n+1");
      c.require(n * (n + 1.0) / (n * n - n - 1.0) < q, "n(n+1)/(n^2-n-1) < q");
      c.require(2.0 * iq - 4.0 / n <= ir, "2/q - 4/n <= 1/r");
      c.require(ir <= 2.0 * iq, "1/r <= 2/q");
      c.require(iq + 1.0 / (n + 1.0) <= ir, "1/q + 1/(n+1) <= 1/r");
      c.require(ir < upper_inv_r(n), "1/r < (n-1)/n (n=3,4) or n/(n+1) (n>=5)");
      break;
    }
  }
  return c.result;
}

OpenInterval gamma_interval(int n, int M, double theta, double zeta, double eta) {
  const double worst = std::max({theta, zeta, M + eta});
  if (!(worst < n + 1.0 - M)) {
    std::ostringstream msg;
    msg << "gamma_interval: max{theta, zeta, M+eta} = " << worst << " is not below n+1-M = " << n + 1 - M;
    throw std::domain_error(msg.str());
  }
  OpenInterval out;
  out.lo = std::max(1.0, (n + 1.0) / (n + 1.0 - M));
  out.hi = worst > 0.0 ? (n + 1.0) / worst : std::numeric_limits<double>::infinity();
  if (!(out.lo < out.hi)) throw std::domain_error("gamma_interval: empty interval");
  return out;
}

ExponentProfile make_profile(int n, double q, double r, std::optional<double> theta_bilinear,
                             std::optional<double> eta, std::optional<double> zeta) {
  ExponentProfile p;
  p.n = n;
  p.q = q;
  p.r = r;
  p.s = sobolev_exponent_s(n, r);
  const ExponentMDelta md = exponents_mdelta(n, r);
  p.M = md.M;
  p.delta = md.delta;
  if (p.s <= q) p.theta = theta_exponent(n, q, r);
  p.theta_bilinear = theta_bilinear;
  p.eta = eta;
  p.zeta = zeta;
  if (theta_bilinear && eta && zeta) p.gamma = gamma_interval(n, p.M, *theta_bilinear, *zeta, *eta);
  return p;
}

}  // namespace oseenlab
