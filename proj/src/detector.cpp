// Copyright (c) 2026 thermoline contributors
// SPDX-License-Identifier: Apache-2.0
#include "thermoline/detector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "thermoline/quadrature.hpp"
#include "thermoline/spectrum.hpp"

namespace thermoline {

void DetectorConfig::validate() const {
  if (!(x_d > 0.0)) {
    throw std::invalid_argument("detector: x_d must be > 0");
  }
  if (!(gamma_d > 0.0 && gamma_d < 0.1)) {
    throw std::invalid_argument("detector: gamma_d must lie in (0, 0.1)");
  }
  if (weight_exponent < 0) {
    throw std::invalid_argument("detector: weight_exponent must be >= 0");
  }
  for (std::size_t i = 0; i < drive_velocities.size(); ++i) {
    if (!(std::abs(drive_velocities[i]) < 0.9)) {
      throw std::invalid_argument("detector: drive velocities must be |v| < 0.9");
    }
    if (i > 0 && !(drive_velocities[i - 1] < drive_velocities[i])) {
      throw std::invalid_argument("detector: drive velocities must ascend");
    }
  }
}

double response_weight(double x, const DetectorConfig& cfg) {
  if (!(x > 0.0)) throw std::domain_error("response_weight: x must be > 0");
  const double r = cfg.x_d / x;
  double w = 1.0;
  for (int i = 0; i < cfg.weight_exponent; ++i) w *= r;
  return w;
}

namespace {

// Weighted-spectrum integrand x^k S(x) in log form; k may be negative.
double weighted_spectrum(double x, double alpha, double k) {
  if (!(x > 0.0)) return 0.0;
  const double le = spectral_log_density(x, alpha, SpectralKind::intensity) +
                    k * std::log(x);
  return le < -745.0 ? 0.0 : std::exp(le);
}

}  // namespace

double registered_mean(double alpha, const DetectorConfig& cfg,
                       double rel_tol) {
  if (!(alpha > 0.0)) {
    throw std::domain_error("registered_mean: alpha must be > 0");
  }
  cfg.validate();
  const SupportWindow w = spectral_support(alpha);
  QuadratureOptions opts;
  opts.rel_tol = rel_tol;
  const double p = static_cast<double>(cfg.weight_exponent);
  const double num =
      integrate_adaptive(
          [&](double x) { return weighted_spectrum(x, alpha, 1.0 - p); },
          w.x_lo, w.x_hi, opts)
          .value;
  const double den =
      integrate_adaptive(
          [&](double x) { return weighted_spectrum(x, alpha, -p); }, w.x_lo,
          w.x_hi, opts)
          .value;
  return num / den;  // the x_d^p response factors cancel
}

namespace {

double lorentzian(double u, double fwhm) {
  const double half = 0.5 * fwhm;
  return half / (3.14159265358979323846 * (u * u + half * half));
}

// Rate integral over [lo, hi] split at the resonance so the adaptive rule
// cannot overlook the narrow Lorentzian core inside a wide panel.
double resonant_rate(double alpha, const DetectorConfig& cfg, double center) {
  const SupportWindow w = spectral_support(alpha);
  const double p = static_cast<double>(cfg.weight_exponent);
  auto f = [&](double x) {
    const double s = weighted_spectrum(x, alpha, -p);
    return s == 0.0 ? 0.0 : s * lorentzian(x - center, cfg.gamma_d);
  };
  const double core = 8.0 * cfg.gamma_d;
  double cuts[4] = {w.x_lo, std::max(w.x_lo, center - core),
                    std::min(w.x_hi, center + core), w.x_hi};
  if (cuts[1] > cuts[2]) cuts[1] = cuts[2] = std::clamp(center, cuts[0], cuts[3]);
  QuadratureOptions opts;
  opts.rel_tol = 1e-9;
  opts.abs_tol = 1e-40;
  double rate = 0.0;
  for (int piece = 0; piece < 3; ++piece) {
    if (cuts[piece] < cuts[piece + 1]) {
      rate += integrate_adaptive(f, cuts[piece], cuts[piece + 1], opts).value;
    }
  }
  return rate;
}

}  // namespace

ScanCurve doppler_scan(double alpha, const DetectorConfig& cfg) {
  if (!(alpha > 0.0)) {
    throw std::domain_error("doppler_scan: alpha must be > 0");
  }
  cfg.validate();
  if (cfg.drive_velocities.size() < 2) {
    throw std::invalid_argument("doppler_scan: need at least two velocities");
  }

  ScanCurve curve;
  curve.drive_velocities = cfg.drive_velocities;
  curve.dip = cfg.absorber;
  curve.count_rate.reserve(cfg.drive_velocities.size());

  double baseline = 0.0;
  if (cfg.absorber) {
    const SupportWindow w = spectral_support(alpha);
    QuadratureOptions opts;
    opts.rel_tol = 1e-9;
    const double p = static_cast<double>(cfg.weight_exponent);
    baseline = integrate_adaptive(
                   [&](double x) { return weighted_spectrum(x, alpha, -p); },
                   w.x_lo, w.x_hi, opts)
                   .value;
  }

  for (const double v : cfg.drive_velocities) {
    const double rate = resonant_rate(alpha, cfg, cfg.x_d * (1.0 + v));
    curve.count_rate.push_back(cfg.absorber ? baseline - rate : rate);
  }
  curve.centroid_velocity = scan_centroid(curve);
  curve.centroid_frequency_ratio = cfg.x_d * (1.0 + curve.centroid_velocity);
  return curve;
}

double scan_centroid(const ScanCurve& curve) {
  if (curve.count_rate.size() != curve.drive_velocities.size() ||
      curve.count_rate.size() < 1) {
    throw std::invalid_argument("scan_centroid: malformed curve");
  }
  const auto [mn, mx] =
      std::minmax_element(curve.count_rate.begin(), curve.count_rate.end());
  const double base = curve.dip ? *mx : *mn;
  double wsum = 0.0, vsum = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < curve.count_rate.size(); ++i) {
    const double w =
        curve.dip ? base - curve.count_rate[i] : curve.count_rate[i] - base;
    wsum += w;
    vsum += w * curve.drive_velocities[i];
    scale = std::max(scale, std::abs(curve.count_rate[i]));
  }
  if (!(wsum > 1e-12 * scale * static_cast<double>(curve.count_rate.size()))) {
    throw std::invalid_argument(
        "scan_centroid: flat curve, centroid undefined");
  }
  return vsum / wsum;
}

}  // namespace thermoline
