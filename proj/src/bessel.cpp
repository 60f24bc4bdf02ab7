// Copyright (c) 2026 thermoline contributors
// SPDX-License-Identifier: Apache-2.0
#include "thermoline/bessel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace thermoline {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286061;

void validate(int order, double x) {
  if (order < 0 || order > kMaxBesselOrder) {
    throw std::domain_error("bessel_k: order " + std::to_string(order) +
                            " outside supported range [0, " +
                            std::to_string(kMaxBesselOrder) + "]");
  }
  if (!(x > 0.0)) {
    throw std::domain_error("bessel_k: argument must be > 0");
  }
}

// Ascending series for K0 and K1, x <= 2. With y = x^2/4 <= 1 the terms
// fall off like 1/(k!)^2, so ~20 terms reach full double precision.
void k01_series(double x, double& k0, double& k1) {
  const double y = 0.25 * x * x;
  const double lg = std::log(0.5 * x) + kEulerGamma;

  double t0 = 1.0;       // y^k / (k!)^2
  double i0 = 1.0;       // I_0 partial sum
  double s0 = 0.0;       // sum of t0 * H_k
  double u = 1.0;        // y^k / (k! (k+1)!)
  double sa = 1.0;       // I_1 series: I_1 = (x/2) * sa
  double sb = 1.0;       // sum of u * (H_k + H_{k+1}); k=0 term is 1
  double hk = 0.0;
  for (int k = 1; k < 64; ++k) {
    const double dk = static_cast<double>(k);
    t0 *= y / (dk * dk);
    hk += 1.0 / dk;
    i0 += t0;
    s0 += t0 * hk;
    u *= y / (dk * (dk + 1.0));
    sa += u;
    sb += u * (2.0 * hk + 1.0 / (dk + 1.0));
    if (t0 < 1e-18 * i0 && u < 1e-18 * sa) break;
  }
  k0 = -lg * i0 + s0;
  k1 = 1.0 / x + 0.5 * x * (lg * sa - 0.5 * sb);
}

// Continued fraction (Temme/Thompson-Barnett form) for the scaled
// e^x K_0 and e^x K_1, valid for x > 2 and stable up to x ~ 1e15.
void k01_scaled_cf(double x, double& k0s, double& k1s) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr int max_iter = 10000;

  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 2; i <= max_iter; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels) <= eps * std::abs(s)) break;
  }
  h = a1 * h;
  k0s = std::sqrt(kPi / (2.0 * x)) / s;
  k1s = k0s * (x + 0.5 - h) / x;
}

// K_{n+1} = K_{n-1} + (2n/x) K_n; forward-stable since K grows with order.
double recur_up(int order, double x, double km, double k) {
  if (order == 0) return km;
  for (int n = 1; n < order; ++n) {
    const double kp = km + (2.0 * n / x) * k;
    km = k;
    k = kp;
  }
  return k;
}

}  // namespace

double bessel_k_scaled(int order, double x) {
  validate(order, x);
  double k0, k1;
  if (x <= 2.0) {
    k01_series(x, k0, k1);
    const double ex = std::exp(x);
    k0 *= ex;
    k1 *= ex;
  } else {
    k01_scaled_cf(x, k0, k1);
  }
  return recur_up(order, x, k0, k1);
}

double bessel_k(int order, double x) {
  validate(order, x);
  if (x <= 2.0) {
    double k0, k1;
    k01_series(x, k0, k1);
    return recur_up(order, x, k0, k1);
  }
  return bessel_k_scaled(order, x) * std::exp(-x);
}

double bessel_k_ratio(int num_order, int den_order, double x) {
  validate(num_order, x);
  validate(den_order, x);
  if (num_order == den_order) return 1.0;
  return bessel_k_scaled(num_order, x) / bessel_k_scaled(den_order, x);
}

}  // namespace thermoline
