// Copyright (c) 2026 thermoline contributors
// SPDX-License-Identifier: Apache-2.0
#include "thermoline/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace thermoline {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
// xgk holds the positive abscissae; odd indices are the Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
  bool splittable;
};

struct LessError {
  bool operator()(const Panel& p, const Panel& q) const {
    return p.error < q.error;
  }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a,
                     double b) {
  const double mid = 0.5 * (a + b);
  const double h = 0.5 * (b - a);

  const double fc = f(mid);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  double resabs = kWgk[7] * std::abs(fc);
  double f1[7], f2[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    f1[j] = f(mid - dx);
    f2[j] = f(mid + dx);
    resk += kWgk[j] * (f1[j] + f2[j]);
    resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1[j] + f2[j]);
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(f1[j] - reskh) + std::abs(f2[j] - reskh));
  }

  const double ah = std::abs(h);
  resabs *= ah;
  resasc *= ah;
  double err = std::abs((resk - resg) * h);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  constexpr double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / eps50) {
    err = std::max(err, eps50 * resabs);
  }
  const bool splittable = (a < mid && mid < b);
  return Panel{a, b, resk * h, err, splittable};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    const QuadratureOptions& opts) {
  if (!(a < b)) throw std::invalid_argument("integrate_adaptive: need a < b");

  std::vector<Panel> heap;  // max-heap on error; frozen panels kept aside
  std::vector<Panel> frozen;
  long evals = 15;
  heap.push_back(evaluate_panel(f, a, b));
  double run_value = heap[0].value;  // running sums for the stop test only
  double run_error = heap[0].error;

  // Exact re-summation over all panels; used for every reported result so
  // the incremental drift of the running sums never reaches callers.
  const auto totals = [&] {
    double value = 0.0, error = 0.0;
    for (const Panel& p : heap) {
      value += p.value;
      error += p.error;
    }
    for (const Panel& p : frozen) {
      value += p.value;
      error += p.error;
    }
    return QuadratureResult{value, error, evals};
  };

  for (;;) {
    if (!std::isfinite(run_value) || !std::isfinite(run_error)) {
      throw QuadratureError("integrate_adaptive: non-finite integrand value",
                            totals());
    }
    const double tol =
        std::max(opts.rel_tol * std::abs(run_value), opts.abs_tol);
    if (run_error <= tol) {
      const QuadratureResult exact = totals();
      if (exact.error <=
          std::max(opts.rel_tol * std::abs(exact.value), opts.abs_tol)) {
        return exact;
      }
      run_value = exact.value;  // running sums had drifted; refresh and go on
      run_error = exact.error;
      continue;
    }
    if (heap.empty()) {
      throw QuadratureError(
          "integrate_adaptive: interval exhausted by roundoff before "
          "reaching tolerance",
          totals());
    }
    if (evals + 30 > opts.max_evaluations) {
      throw QuadratureError(
          "integrate_adaptive: evaluation budget exhausted before reaching "
          "tolerance",
          totals());
    }

    std::pop_heap(heap.begin(), heap.end(), LessError{});
    const Panel worst = heap.back();
    heap.pop_back();
    if (!worst.splittable) {
      frozen.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = evaluate_panel(f, worst.a, mid);
    const Panel right = evaluate_panel(f, mid, worst.b);
    run_value += left.value + right.value - worst.value;
    run_error += left.error + right.error - worst.error;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), LessError{});
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), LessError{});
    evals += 30;
  }
}

QuadratureResult integrate_to_infinity(const std::function<double(double)>& f,
                                       double a,
                                       const QuadratureOptions& opts) {
  auto mapped = [a, &f](double u) -> double {
    const double om = 1.0 - u;
    if (!(om > 0.0)) return 0.0;
    const double t = a + u / om;
    const double ft = f(t);
    if (ft == 0.0) return 0.0;
    return ft / (om * om);
  };
  return integrate_adaptive(mapped, 0.0, 1.0, opts);
}

}  // namespace thermoline
