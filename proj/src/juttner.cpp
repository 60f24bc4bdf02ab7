// Copyright (c) 2026 thermoline contributors
// SPDX-License-Identifier: Apache-2.0
#include "thermoline/juttner.hpp"

#include <cmath>
#include <stdexcept>

#include "thermoline/bessel.hpp"

namespace thermoline {

void EnsembleParams::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("EnsembleParams: alpha must be finite and > 0");
  }
  if (!(omega0 > 0.0) || !std::isfinite(omega0)) {
    throw std::invalid_argument("EnsembleParams: omega0 must be finite and > 0");
  }
  if (!(intensity0 >= 0.0) || !std::isfinite(intensity0)) {
    throw std::invalid_argument(
        "EnsembleParams: intensity0 must be finite and >= 0");
  }
}

double juttner_pdf(double beta, double alpha) {
  if (!(alpha > 0.0)) {
    throw std::domain_error("juttner_pdf: alpha must be > 0");
  }
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw std::domain_error("juttner_pdf: beta must lie in [0, 1)");
  }
  if (beta == 0.0) return 0.0;
  const double om = (1.0 - beta) * (1.0 + beta);
  const double gamma = 1.0 / std::sqrt(om);
  // alpha (gamma - 1) without cancellation for beta -> 0
  const double agm1 = alpha * (beta * beta * gamma * gamma / (1.0 + gamma));
  const double logp = std::log(alpha) - std::log(bessel_k_scaled(2, alpha)) +
                      2.0 * std::log(beta) + 5.0 * std::log(gamma) - agm1;
  return logp < -745.0 ? 0.0 : std::exp(logp);
}

JuttnerSampler::JuttnerSampler(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::domain_error("JuttnerSampler: alpha must be finite and > 0");
  }
  gamma_shape_ = alpha > 100.0;
  rate_ = gamma_shape_ ? 0.9 * alpha : 0.5 * alpha;

  // The log acceptance ratio is concave in t, so a ternary search finds
  // its supremum; a tiny headroom keeps the envelope valid against the
  // search truncation.
  double lo = 0.0;
  double hi = 4.0 / (alpha_ - rate_) + 4.0;
  for (int i = 0; i < 200; ++i) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (log_accept_ratio(m1) < log_accept_ratio(m2)) {
      lo = m1;
    } else {
      hi = m2;
    }
  }
  log_bound_ = log_accept_ratio(0.5 * (lo + hi)) + 1e-9;
}

double JuttnerSampler::log_accept_ratio(double t) const {
  if (!(t > 0.0)) return gamma_shape_ ? 0.5 * std::log(2.0) : -1e300;
  const double delta = alpha_ - rate_;
  double lr = std::log1p(t) + 0.5 * std::log(t + 2.0) - delta * t;
  if (!gamma_shape_) lr += 0.5 * std::log(t);
  return lr;
}

double JuttnerSampler::sample_t(RandomStream& stream) const {
  for (;;) {
    double t;
    if (gamma_shape_) {
      const double z = stream.next_normal();
      t = (0.5 * z * z + stream.next_exponential()) / rate_;
    } else {
      t = stream.next_exponential() / rate_;
    }
    if (!(t > 0.0)) continue;
    const double u = stream.next_open();
    if (std::log(u) <= log_accept_ratio(t) - log_bound_) {
      return t;
    }
  }
}

double JuttnerSampler::sample_gamma(RandomStream& stream) const {
  return 1.0 + sample_t(stream);
}

double JuttnerSampler::sample_beta(RandomStream& stream) const {
  // Work with t = gamma - 1; recovering it from gamma would shed precision
  // in the cold regime where t ~ 1/alpha is below the epsilon of 1.0.
  const double t = sample_t(stream);
  return std::sqrt(t * (t + 2.0)) / (1.0 + t);
}

std::vector<double> juttner_sample(double alpha, std::size_t n,
                                   RandomStream& stream) {
  const JuttnerSampler sampler(alpha);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(sampler.sample_beta(stream));
  }
  return out;
}

double mean_inverse_gamma(double alpha) {
  if (!(alpha > 0.0)) {
    throw std::domain_error("mean_inverse_gamma: alpha must be > 0");
  }
  return bessel_k_ratio(1, 2, alpha);
}

std::vector<EmissionSample> sample_emission(double alpha, std::size_t n,
                                            RandomStream& stream) {
  const JuttnerSampler sampler(alpha);
  std::vector<EmissionSample> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double beta = sampler.sample_beta(stream);
    const double cos_theta = 2.0 * stream.next_double() - 1.0;
    out.push_back({beta, cos_theta});
  }
  return out;
}

}  // namespace thermoline
