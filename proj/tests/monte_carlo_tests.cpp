// Copyright (c) 2026 thermoline contributors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "thermoline/monte_carlo.hpp"
#include "thermoline/quadrature.hpp"
#include "thermoline/spectrum.hpp"

using namespace thermoline;

namespace {

SimulationSpec base_spec(WeightMode mode, std::uint64_t n,
                         std::uint64_t seed) {
  SimulationSpec spec;
  spec.params.alpha = 10.0;
  spec.mode = mode;
  spec.n_samples = n;
  spec.x_lo = 0.3;
  spec.x_hi = 3.0;
  spec.bins = 100;
  spec.seed = seed;
  return spec;
}

}  // namespace

TEST_CASE("spec validation") {
  SimulationSpec spec = base_spec(WeightMode::intensity, 1000, 1);
  CHECK_NOTHROW(spec.validate());
  spec.n_samples = 0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = base_spec(WeightMode::intensity, 10, 1);
  spec.x_lo = 1.2;  // range must straddle x = 1
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = base_spec(WeightMode::intensity, 10, 1);
  spec.bins = 0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("default histogram range straddles the line and tracks alpha") {
  const HistogramRange cold = default_histogram_range(1000.0);
  CHECK(cold.x_lo < 1.0);
  CHECK(cold.x_hi > 1.0);
  CHECK(cold.x_lo * cold.x_hi == doctest::Approx(1.0).epsilon(1e-12));
  const HistogramRange hot = default_histogram_range(1.0);
  CHECK(hot.x_hi > cold.x_hi);  // hotter ensemble reaches further out
  CHECK(hot.x_hi > 10.0);
  CHECK(cold.x_hi < 1.2);
}

TEST_CASE("identical spec gives identical results at any worker count") {
  const SimulationSpec spec = base_spec(WeightMode::intensity, 200000, 11);
  const SimulationResult serial = simulate_spectrum(spec, 1);
  const SimulationResult threaded = simulate_spectrum(spec, 8);
  const SimulationResult threaded3 = simulate_spectrum(spec, 3);
  CHECK(serial == threaded);
  CHECK(serial == threaded3);

  const SimulationResult reseeded =
      simulate_spectrum(base_spec(WeightMode::intensity, 200000, 12), 1);
  CHECK(reseeded.mean_x != serial.mean_x);
}

TEST_CASE("intensity weights average to unity by power conservation") {
  const SimulationResult r =
      simulate_spectrum(base_spec(WeightMode::intensity, 400000, 5));
  const double n = static_cast<double>(r.n_samples);
  // <w> = 1 with Var(w) ~ 1.2 at alpha = 10
  CHECK(std::abs(r.total_weight / n - 1.0) <= 5.0 * std::sqrt(1.5 / n));
  CHECK(r.effective_sample_size <= n);
  CHECK(r.effective_sample_size > 0.3 * n);
}

TEST_CASE("counting weights average to unity by isotropy") {
  const SimulationResult r =
      simulate_spectrum(base_spec(WeightMode::counting, 400000, 6));
  const double n = static_cast<double>(r.n_samples);
  // Var(1 - beta cos) = <beta^2>/3 < 1/3
  CHECK(std::abs(r.total_weight / n - 1.0) <= 5.0 * std::sqrt(1.0 / (3.0 * n)));
}

TEST_CASE("counting-mode mean lands on the thermal redshift") {
  const SimulationResult r =
      simulate_spectrum(base_spec(WeightMode::counting, 400000, 7));
  CHECK(std::abs(r.mean_x - mean_inverse_gamma(10.0)) <=
        3.0 * r.mean_x_error);
  CHECK(r.mean_x < 1.0);
}

TEST_CASE("intensity histogram converges to the closed-form spectrum") {
  const SimulationResult r =
      simulate_spectrum(base_spec(WeightMode::intensity, 400000, 2));
  const DistanceReport report = histogram_distance(
      r, [](double x) { return intensity_spectrum(x, 10.0); });
  CHECK(report.l1 < 0.02);  // ~ E[L1] at n = 4e5 is 0.016
  CHECK(report.chi2_per_bin > 0.5);
  CHECK(report.chi2_per_bin < 2.0);

  // mismatched-temperature oracle must be visibly off (negative control)
  const DistanceReport wrong = histogram_distance(
      r, [](double x) { return intensity_spectrum(x, 20.0); });
  CHECK(wrong.l1 > 0.05);
  CHECK(wrong.chi2_per_bin > 10.0);
}

TEST_CASE("histogram built from the density itself has zero L1 distance") {
  SimulationSpec spec = base_spec(WeightMode::intensity, 1000, 1);
  WeightedHistogram exact = WeightedHistogram::uniform(spec.x_lo, spec.x_hi,
                                                       spec.bins);
  const double n = static_cast<double>(spec.n_samples);
  QuadratureOptions opts;
  opts.rel_tol = 1e-10;
  double total = 0.0;
  for (std::size_t i = 0; i < exact.bins(); ++i) {
    const double lo = exact.bin_edges()[i];
    const double hi = exact.bin_edges()[i + 1];
    const double q = integrate_adaptive(
                         [](double x) { return intensity_spectrum(x, 10.0); },
                         lo, hi, opts)
                         .value;
    exact.add(0.5 * (lo + hi), n * q);
    total += n * q;
  }
  SimulationResult r;
  r.histogram = exact;
  r.n_samples = spec.n_samples;
  r.total_weight = total;
  const DistanceReport report = histogram_distance(
      r, [](double x) { return intensity_spectrum(x, 10.0); });
  CHECK(report.l1 < 1e-8);
}

TEST_CASE("empty accumulation is a data error") {
  SimulationResult r;
  r.histogram = WeightedHistogram::uniform(0.5, 2.0, 10);
  r.n_samples = 0;
  CHECK_THROWS_AS(
      histogram_distance(r, [](double x) { return x; }),
      std::invalid_argument);
}

TEST_CASE("unweighted diagnostic mode runs and keeps unit weights") {
  const SimulationResult r =
      simulate_spectrum(base_spec(WeightMode::unweighted, 50000, 3));
  CHECK(r.total_weight == doctest::Approx(50000.0));
  CHECK(r.effective_sample_size == doctest::Approx(50000.0));
}
