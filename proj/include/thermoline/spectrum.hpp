// Copyright (c) 2026 thermoline contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "thermoline/juttner.hpp"

// Observable spectrum of the thermal radiator ensemble, in dimensionless
// form: frequencies as x = omega/omega_0, intensity density in units of
// I_0'/omega_0, counting density in units of 1/omega_0. Both share the
// exponential kernel exp[-(alpha/2)(x + 1/x)].

namespace thermoline {

enum class SpectralKind { intensity, counting };

struct SpectralPoint {
  double x;
  double density;
};

struct SpectralDensity {
  EnsembleParams params;
  SpectralKind kind = SpectralKind::intensity;
  std::vector<SpectralPoint> points;  // strictly ascending in x
};

/// Closed-form intensity spectrum
///   S(x) = x exp[-(alpha/2)(x + 1/x)] / (2 K_2(alpha)),
/// the energy arriving per unit observer time and frequency. Evaluated
/// through the scaled Bessel function and the peak-anchored exponent, so it
/// stays finite (possibly zero) for alpha up to 1e15.
double intensity_spectrum(double x, double alpha);

/// Counting spectrum P(x) = x^{-3} exp[-(alpha/2)(x + 1/x)] / (2 K_2(alpha)):
/// the probability density of arriving wave frequency when waves are counted
/// instead of energy-weighted.
double counting_spectrum(double x, double alpha);

/// Natural log of the densities above; representable even where the
/// densities themselves underflow.
double spectral_log_density(double x, double alpha, SpectralKind kind);

/// The same intensity spectrum obtained by numerically averaging the
/// per-radiator boost over the ensemble: the speed marginal
///   S(x) = x (alpha / 2 K_2) int_{beta_min(x)}^{1} beta (1-beta^2)^{-3/2}
///          exp[-alpha/sqrt(1-beta^2)] dbeta.
/// Independent evaluation path used to cross-check the closed form.
double marginal_spectrum_quadrature(double x, double alpha,
                                    double rel_tol = 1e-10);

/// Peak position of the intensity spectrum, 1/alpha + sqrt(1 + 1/alpha^2);
/// strictly above 1 for every finite alpha (thermal blueshift).
double line_center(double alpha);

/// Moment ratio int x^m w(x) density dx / int w(x) density dx with the
/// detector-style weight w = x^{-weight_exponent}, in closed Bessel form
/// (negative implied orders fold back via K_{-nu} = K_nu).
double spectral_moment(double alpha, SpectralKind kind, int weight_exponent,
                       int order);

/// Same moment by adaptive quadrature; the independent route for the
/// closed-form ratios.
double spectral_moment_quadrature(double alpha, SpectralKind kind,
                                  int weight_exponent, int order,
                                  double rel_tol = 1e-12);

/// Hot limit (alpha -> 0) of the intensity spectrum, (alpha/2)^2 x;
/// Lorentz-invariant linear form. Documented regime alpha <= 0.1.
double high_temperature_limit(double x, double alpha);

struct SupportWindow {
  double x_lo;
  double x_hi;
};

/// Interval outside which the spectral kernel has dropped by at least
/// e^{-log_drop} relative to the peak; x_lo = 1/x_hi.
SupportWindow spectral_support(double alpha, double log_drop = 120.0);

/// Densities tabulated on a uniform x grid.
SpectralDensity tabulate_spectrum(const EnsembleParams& params,
                                  SpectralKind kind, double x_min,
                                  double x_max, int points);

}  // namespace thermoline
