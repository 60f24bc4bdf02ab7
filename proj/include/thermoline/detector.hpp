// Copyright (c) 2026 thermoline contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

namespace thermoline {

/// Resonance detector driven across the line. The moving detector sees each
/// source frequency component with relative weight (omega_d/omega)^4; the
/// resonance itself is modeled as a unit-area Lorentzian of FWHM gamma_d.
/// In absorber mode the resonance sits between source and detector and the
/// scan shows a transmission dip instead of a peak.
struct DetectorConfig {
  double x_d = 1.0;      // resonance frequency in omega_0 units
  double gamma_d = 1e-3;  // resonance FWHM in omega_0 units
  int weight_exponent = 4;
  std::vector<double> drive_velocities;  // v/c, ascending, |v| < 0.9
  bool absorber = false;

  void validate() const;
};

struct ScanCurve {
  std::vector<double> drive_velocities;
  std::vector<double> count_rate;
  double centroid_velocity = 0.0;
  double centroid_frequency_ratio = 0.0;
  bool dip = false;
};

/// Relative response (x_d / x)^weight_exponent of the moving detector to
/// the frequency ratio x.
double response_weight(double x, const DetectorConfig& cfg);

/// Response-weighted mean frequency of the intensity spectrum,
/// int x w(x) S(x) dx / int w(x) S(x) dx, by quadrature. For the physical
/// exponent 4 this equals the thermal average of sqrt(1-beta^2), i.e.
/// K_1(alpha)/K_2(alpha): the weighting turns the blueshifted intensity
/// mean into the customary redshift.
double registered_mean(double alpha, const DetectorConfig& cfg,
                       double rel_tol = 1e-12);

/// Count rate versus drive velocity: the response-weighted source spectrum
/// swept by the resonance centered at x_d (1 + v). First-order Doppler for
/// the drive; quadrature failures propagate per velocity point.
ScanCurve doppler_scan(double alpha, const DetectorConfig& cfg);

/// Background-subtracted, rate-weighted first moment of a scan curve.
/// Throws std::invalid_argument when the curve is flat.
double scan_centroid(const ScanCurve& curve);

}  // namespace thermoline
