// Copyright (c) 2026 thermoline contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <stdexcept>

namespace thermoline {

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-300;
  long max_evaluations = 2000000;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // <= requested tolerance on success
  long evaluations = 0;
};

/// Thrown when the evaluation budget runs out before the tolerance is
/// met; carries the best estimate so callers can still inspect it.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadratureResult best)
      : std::runtime_error(what), best_estimate(best) {}
  QuadratureResult best_estimate;
};

/// Globally adaptive Gauss-Kronrod (G7,K15) integration of f over [a, b].
/// Worst-error bisection until the total error estimate drops below
/// max(rel_tol*|value|, abs_tol). Endpoints are never evaluated, so
/// integrable endpoint singularities are tolerated.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    const QuadratureOptions& opts = {});

/// Integral of f over [a, inf), mapped onto [0, 1) via t = a + u/(1-u).
/// f must decay fast enough to be integrable; where it has underflowed
/// to zero the transformed integrand is taken as zero.
QuadratureResult integrate_to_infinity(const std::function<double(double)>& f,
                                       double a,
                                       const QuadratureOptions& opts = {});

}  // namespace thermoline
