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

#include "oseenlab/field.hpp"

namespace oseenlab {

// Box surrogates of the norms in the a-priori estimates. Integrals are
// rectangle-rule sums over the periodic grid (spectrally accurate for smooth
// periodic integrands); vector fields use the pointwise Euclidean magnitude.

enum class NormKind { Lq, SeminormKq, NegativeNorm1r, LambdaNorm, MaxRegNorm };

struct NormRequest {
  NormKind kind = NormKind::Lq;
  double q_exponent = 2.0;
  int k_order = 0;
  double lambda = 0.0;
  double r_exponent = 2.0;

  /// Exponents in (1, inf), 0 <= k_order <= 2, lambda >= 0.
  void validate() const;
};

/// (integral |f|^q dx)^(1/q). Throws std::invalid_argument unless q in (1, inf)
/// and std::domain_error on non-finite values.
double lq_norm(const ScalarField& f, double q);
double lq_norm(const VectorField& f, double q);
/// Same quantity evaluated from coefficients (any component count).
double lq_norm(const SpectralField& f, double q);

/// Sum over multi-indices |alpha| = k of ||D^alpha u||_q; k in {1, 2}.
double sobolev_seminorm(const VectorField& u, int k, double q);
double sobolev_seminorm(const SpectralField& u, int k, double q);

/// ||u||_q + |u|_{1,q} + |u|_{2,q}.
double w2q_norm(const SpectralField& u, double q);

struct NegativeNorm {
  double value = 0.0;
  /// The input had a nonzero box mean that was removed before evaluation.
  bool mean_projected = false;
};

/// ||grad (-Laplace)^{-1} f||_r computed spectrally, the computable stand-in
/// for the dual norm |f|_{-1,r}. The xi = 0 coefficient is dropped.
NegativeNorm negative_norm_surrogate(const SpectralField& f, double r);
NegativeNorm negative_norm_surrogate(const VectorField& f, double r);

/// s = (n+1) r / (n+1-r); throws std::invalid_argument if r >= n+1.
double sobolev_exponent_s(int n, double r);

/// |v|_{2,q} + |v|_{1,r} + lambda^{1/(n+1)} ||v||_s.
double lambda_norm(const SpectralField& v, double lambda, double q, double r, int n);
double lambda_norm(const VectorField& v, double lambda, double q, double r, int n);

/// Default number of uniform time samples used for Bochner norms.
int default_time_samples(int max_mode);

/// ( (1/T) int_0^T ||u(t)||_q^q dt )^(1/q) by uniform quadrature.
double bochner_lq(const TimePeriodicField& u, double q, int time_samples = 0);

/// ||u||_{L^q(W^{2,q})} + ||d_t u||_{L^q(L^q)}, time mean normalized by 1/T.
double maxreg_norm(const TimePeriodicField& u, double q, int time_samples = 0);

/// Dispatch on a request; MaxRegNorm is not defined for steady fields and throws.
double evaluate_norm(const NormRequest& req, const VectorField& f, int n);

}  // namespace oseenlab
