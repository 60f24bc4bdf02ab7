// Copyright (c) 2026 thermoline contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace thermoline {

/// Highest supported order for the modified Bessel functions of the
/// second kind. The spectral moments need at most K_4; the headroom
/// serves generalized weighted moments.
inline constexpr int kMaxBesselOrder = 8;

/// Modified Bessel function of the second kind K_nu(x) for integer
/// order nu in [0, kMaxBesselOrder] and x > 0.
///
/// Ascending series for x <= 2, continued-fraction evaluation beyond,
/// upward recurrence in the order. Relative accuracy is a few ulps,
/// comfortably within 1e-12 of the integral representation
/// int_0^inf exp(-x cosh t) cosh(nu t) dt.
///
/// For x large enough that K_nu underflows (x >~ 745) the unscaled
/// value returns 0.0; use bessel_k_scaled or bessel_k_ratio there.
double bessel_k(int order, double x);

/// Exponentially scaled variant e^x K_nu(x). Free of overflow and
/// underflow for x up to 1e15.
double bessel_k_scaled(int order, double x);

/// Stable ratio K_num(x) / K_den(x), evaluated from scaled values so
/// the e^x factors cancel. Finite and positive even where the unscaled
/// functions underflow to zero.
double bessel_k_ratio(int num_order, int den_order, double x);

}  // namespace thermoline
