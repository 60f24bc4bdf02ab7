// Copyright (c) 2026 thermoline contributors
// SPDX-License-Identifier: Apache-2.0
#include "thermoline/spectrum.hpp"

#include <cmath>
#include <stdexcept>

#include "thermoline/bessel.hpp"
#include "thermoline/kinematics.hpp"
#include "thermoline/quadrature.hpp"

namespace thermoline {

namespace {

void check_args(double x, double alpha) {
  if (!(x > 0.0)) throw std::domain_error("spectrum: x must be > 0");
  if (!(alpha > 0.0)) throw std::domain_error("spectrum: alpha must be > 0");
}

// alpha - (alpha/2)(x + 1/x) = -(alpha/2)(x-1)^2/x: the kernel exponent
// relative to its maximum at x = 1, well conditioned near the peak.
double shifted_exponent(double x, double alpha) {
  const double d = x - 1.0;
  return -0.5 * alpha * d * d / x;
}

double log_norm(double alpha) {
  return std::log(2.0 * bessel_k_scaled(2, alpha));
}

}  // namespace

double intensity_spectrum(double x, double alpha) {
  check_args(x, alpha);
  const double le = std::log(x) + shifted_exponent(x, alpha) - log_norm(alpha);
  return le < -745.0 ? 0.0 : std::exp(le);
}

double counting_spectrum(double x, double alpha) {
  check_args(x, alpha);
  const double le =
      -3.0 * std::log(x) + shifted_exponent(x, alpha) - log_norm(alpha);
  return le < -745.0 ? 0.0 : std::exp(le);
}

double spectral_log_density(double x, double alpha, SpectralKind kind) {
  check_args(x, alpha);
  const double lx = std::log(x);
  const double k = kind == SpectralKind::intensity ? 1.0 : -3.0;
  return k * lx + shifted_exponent(x, alpha) - log_norm(alpha);
}

double marginal_spectrum_quadrature(double x, double alpha, double rel_tol) {
  check_args(x, alpha);
  auto integrand = [alpha](double b) -> double {
    if (!(b > 0.0) || !(b < 1.0)) return 0.0;
    const double om = (1.0 - b) * (1.0 + b);
    const double g = 1.0 / std::sqrt(om);
    // log of beta (1-beta^2)^{-3/2} exp[alpha(1 - gamma)]; the exponent is
    // anchored at gamma = 1 to match the closed form's scaling.
    const double agm1 = alpha * (b * b * g * g / (1.0 + g));
    const double lf = std::log(b) + 3.0 * std::log(g) - agm1;
    return lf < -745.0 ? 0.0 : std::exp(lf);
  };
  QuadratureOptions opts;
  opts.rel_tol = rel_tol;
  const QuadratureResult q =
      integrate_adaptive(integrand, beta_min(x), 1.0, opts);
  return x * alpha / (2.0 * bessel_k_scaled(2, alpha)) * q.value;
}

double line_center(double alpha) {
  if (!(alpha > 0.0)) throw std::domain_error("line_center: alpha must be > 0");
  const double ia = 1.0 / alpha;
  return ia + std::sqrt(1.0 + ia * ia);
}

namespace {

// int x^{k-1} exp[-(alpha/2)(x + 1/x)] dx = 2 K_k(alpha); the quadrature
// below computes it with the kernel shifted to its x = 1 peak.
double kernel_moment_quadrature(double alpha, double k, double rel_tol) {
  const SupportWindow w = spectral_support(alpha);
  auto f = [alpha, k](double x) -> double {
    const double le = (k - 1.0) * std::log(x) + shifted_exponent(x, alpha);
    return le < -745.0 ? 0.0 : std::exp(le);
  };
  QuadratureOptions opts;
  opts.rel_tol = rel_tol;
  return integrate_adaptive(f, w.x_lo, w.x_hi, opts).value;
}

int kernel_base(SpectralKind kind) {
  return kind == SpectralKind::intensity ? 2 : -2;
}

}  // namespace

double spectral_moment(double alpha, SpectralKind kind, int weight_exponent,
                       int order) {
  if (!(alpha > 0.0)) {
    throw std::domain_error("spectral_moment: alpha must be > 0");
  }
  const int base = kernel_base(kind);
  const int num = base + order - weight_exponent;
  const int den = base - weight_exponent;
  if (std::abs(num) > kMaxBesselOrder || std::abs(den) > kMaxBesselOrder) {
    throw std::domain_error(
        "spectral_moment: implied Bessel order outside supported range");
  }
  return bessel_k_ratio(std::abs(num), std::abs(den), alpha);
}

double spectral_moment_quadrature(double alpha, SpectralKind kind,
                                  int weight_exponent, int order,
                                  double rel_tol) {
  if (!(alpha > 0.0)) {
    throw std::domain_error("spectral_moment: alpha must be > 0");
  }
  const int base = kernel_base(kind);
  const double num =
      kernel_moment_quadrature(alpha, base + order - weight_exponent, rel_tol);
  const double den =
      kernel_moment_quadrature(alpha, base - weight_exponent, rel_tol);
  return num / den;
}

double high_temperature_limit(double x, double alpha) {
  check_args(x, alpha);
  return 0.25 * alpha * alpha * x;
}

SupportWindow spectral_support(double alpha, double log_drop) {
  if (!(alpha > 0.0)) {
    throw std::domain_error("spectral_support: alpha must be > 0");
  }
  const double r = log_drop / alpha;  // x + 1/x = 2(1 + r) at the window edge
  const double t = 1.0 + r;
  const double x_hi = t + std::sqrt(r * (2.0 + r));
  return {1.0 / x_hi, x_hi};
}

SpectralDensity tabulate_spectrum(const EnsembleParams& params,
                                  SpectralKind kind, double x_min,
                                  double x_max, int points) {
  params.validate();
  if (!(x_min > 0.0) || !(x_min < x_max) || points < 2) {
    throw std::invalid_argument(
        "tabulate_spectrum: need 0 < x_min < x_max and points >= 2");
  }
  SpectralDensity out;
  out.params = params;
  out.kind = kind;
  out.points.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double x = x_min + (x_max - x_min) * i / (points - 1);
    const double d = kind == SpectralKind::intensity
                         ? intensity_spectrum(x, params.alpha)
                         : counting_spectrum(x, params.alpha);
    out.points.push_back({x, d});
  }
  return out;
}

}  // namespace thermoline
