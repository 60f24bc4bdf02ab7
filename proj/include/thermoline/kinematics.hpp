// Copyright (c) 2026 thermoline contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <stdexcept>

// Special-relativity building blocks for a radiator moving with velocity
// beta (units of c; c = 1 throughout). Frequencies are carried as the
// ratio x = omega / omega_0.

namespace thermoline {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }
inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }

/// One radiator's kinematic sample as seen from the lab: speed and the
/// cosine of the angle between the velocity and the line of sight.
struct EmissionState {
  double beta;
  double cos_theta;
  double gamma;

  EmissionState(double beta_, double cos_theta_)
      : beta(beta_), cos_theta(cos_theta_) {
    if (!(beta >= 0.0 && beta < 1.0)) {
      throw std::domain_error("EmissionState: beta must lie in [0, 1)");
    }
    if (!(cos_theta >= -1.0 && cos_theta <= 1.0)) {
      throw std::domain_error("EmissionState: |cos_theta| must be <= 1");
    }
    gamma = 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta));
  }
};

/// Observed/emitted frequency ratio sqrt(1-beta^2) / (1 - beta cos_theta):
/// first-order Doppler from the angle, second-order from time dilation.
inline double doppler_factor(const EmissionState& s) {
  return std::sqrt((1.0 - s.beta) * (1.0 + s.beta)) /
         (1.0 - s.beta * s.cos_theta);
}

/// Boost factor (1-beta^2)^2 / (1 - beta cos_theta)^3 converting the rest
/// frame intensity into energy received per unit observer time.
inline double energy_rate_boost(const EmissionState& s) {
  const double om = (1.0 - s.beta) * (1.0 + s.beta);
  const double d = 1.0 - s.beta * s.cos_theta;
  return om * om / (d * d * d);
}

/// Boost factor (1-beta^2)^2 / (1 - beta cos_theta)^4 of the angular
/// intensity distribution (per unit emitter time).
inline double power_boost(const EmissionState& s) {
  const double om = (1.0 - s.beta) * (1.0 + s.beta);
  const double d = 1.0 - s.beta * s.cos_theta;
  return om * om / (d * d * d * d);
}

/// Emission direction cosine transformed from the lab into the radiator
/// frame: cos_theta' = (cos_theta - beta) / (1 - beta cos_theta).
inline double aberration(double cos_theta_lab, double beta) {
  return (cos_theta_lab - beta) / (1.0 - beta * cos_theta_lab);
}

/// Lab velocity and its coordinate-time derivative.
struct KinematicState {
  Vec3 beta;
  Vec3 beta_dot;
};

struct FourAcceleration {
  double time_component = 0.0;
  Vec3 space_component;
};

/// Four-acceleration components from the lab kinematics:
///   a^0 = gamma^4 (beta . beta_dot),   a = gamma^2 beta_dot + a^0 beta.
/// Orthogonal to the four-velocity by construction.
inline FourAcceleration four_acceleration(const KinematicState& k) {
  const double b2 = norm2(k.beta);
  if (!(b2 < 1.0)) {
    throw std::domain_error("four_acceleration: |beta| must be < 1");
  }
  const double g2 = 1.0 / (1.0 - b2);
  const double a0 = g2 * g2 * dot(k.beta, k.beta_dot);
  return {a0, g2 * k.beta_dot + a0 * k.beta};
}

/// Coordinate acceleration beta_dot produced by a given proper (rest-frame)
/// acceleration:  beta_dot = (1-beta^2) [a' - (gamma/(1+gamma)) (a'.beta) beta].
inline Vec3 coordinate_acceleration(const Vec3& rest_accel, const Vec3& beta) {
  const double b2 = norm2(beta);
  if (!(b2 < 1.0)) {
    throw std::domain_error("coordinate_acceleration: |beta| must be < 1");
  }
  const double gamma = 1.0 / std::sqrt(1.0 - b2);
  return (1.0 - b2) *
         (rest_accel - (gamma / (1.0 + gamma)) * dot(rest_accel, beta) * beta);
}

/// Boost of a four-vector into the frame co-moving with velocity beta.
/// For the four-acceleration of that particle the result is (0, a_rest).
inline FourAcceleration boost_to_rest(const FourAcceleration& a,
                                      const Vec3& beta) {
  const double b2 = norm2(beta);
  if (!(b2 < 1.0)) {
    throw std::domain_error("boost_to_rest: |beta| must be < 1");
  }
  const double gamma = 1.0 / std::sqrt(1.0 - b2);
  const double bdota = dot(beta, a.space_component);
  const double t = gamma * (a.time_component - bdota);
  // (gamma-1)/beta^2 = gamma^2/(gamma+1), stable as beta -> 0
  const double gm1_over_b2 = gamma * gamma / (gamma + 1.0);
  const Vec3 s = a.space_component +
                 (gm1_over_b2 * bdota - gamma * a.time_component) * beta;
  return {t, s};
}

/// Minkowski contraction a^mu u_mu (signature +,-,-,-) with the
/// four-velocity of the same particle; zero for a true four-acceleration.
inline double acceleration_velocity_contraction(const FourAcceleration& a,
                                                const Vec3& beta) {
  const double gamma = 1.0 / std::sqrt(1.0 - norm2(beta));
  return a.time_component * gamma - gamma * dot(a.space_component, beta);
}

struct DopplerSupport {
  double x_min;
  double x_max;
};

/// Frequency-ratio band [sqrt((1-b)/(1+b)), sqrt((1+b)/(1-b))] reachable by
/// a radiator of speed beta; x_min * x_max = 1.
inline DopplerSupport doppler_support(double beta) {
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw std::domain_error("doppler_support: beta must lie in [0, 1)");
  }
  const double x_max = std::sqrt((1.0 + beta) / (1.0 - beta));
  return {1.0 / x_max, x_max};
}

/// Smallest speed able to produce the frequency ratio x:
/// beta_min = |x^2 - 1| / (x^2 + 1). This unsquared ratio is the lower
/// integration limit that reproduces the closed-form spectrum; see the
/// marginal-integral cross checks.
inline double beta_min(double x) {
  if (!(x > 0.0)) throw std::domain_error("beta_min: x must be > 0");
  const double x2 = x * x;
  return std::abs(x2 - 1.0) / (x2 + 1.0);
}

}  // namespace thermoline
