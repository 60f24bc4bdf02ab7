// Copyright (c) 2026 thermoline contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "thermoline/random_stream.hpp"

namespace thermoline {

/// Canonical ensemble of monochromatic radiators. alpha = m c^2 / kT is the
/// only physics parameter of the dimensionless core; omega0 and intensity0
/// rescale outputs into physical units at the interface layer.
struct EnsembleParams {
  double alpha = 1.0;
  double omega0 = 1.0;
  double intensity0 = 1.0;

  void validate() const;
};

/// One emission event: speed drawn from the Juttner law, direction cosine
/// uniform on [-1, 1].
struct EmissionSample {
  double beta;
  double cos_theta;
};

/// Normalized Juttner speed density
///   P(beta) = (alpha / K_2(alpha)) beta^2 (1-beta^2)^{-5/2}
///             exp(-alpha / sqrt(1-beta^2)).
/// Evaluated in the log domain against the beta = 0 anchor so the value
/// stays representable for alpha up to 1e15.
double juttner_pdf(double beta, double alpha);

/// Rejection sampler for gamma with density ~ gamma sqrt(gamma^2-1)
/// exp(-alpha gamma) on [1, inf). Proposal families switch at alpha = 100
/// (shifted exponential below, Gamma(3/2) above); the switch is internal
/// and does not change the sampled distribution.
class JuttnerSampler {
 public:
  explicit JuttnerSampler(double alpha);

  double sample_gamma(RandomStream& stream) const;
  double sample_beta(RandomStream& stream) const;

 private:
  double log_accept_ratio(double t) const;  // t = gamma - 1
  double sample_t(RandomStream& stream) const;

  double alpha_;
  double rate_;       // proposal rate in t
  double log_bound_;  // sup_t log(target/proposal shape)
  bool gamma_shape_;  // Gamma(3/2) proposal instead of exponential
};

/// n i.i.d. Juttner speeds, deterministic for a given stream state.
std::vector<double> juttner_sample(double alpha, std::size_t n,
                                   RandomStream& stream);

/// Ensemble mean of sqrt(1-beta^2) = 1/gamma, i.e. K_1(alpha)/K_2(alpha);
/// this thermal average of the second-order Doppler factor is the
/// customary redshift expression.
double mean_inverse_gamma(double alpha);

/// n independent (beta, cos_theta) pairs.
std::vector<EmissionSample> sample_emission(double alpha, std::size_t n,
                                            RandomStream& stream);

}  // namespace thermoline
