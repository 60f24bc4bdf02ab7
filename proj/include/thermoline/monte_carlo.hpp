// Copyright (c) 2026 thermoline contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "thermoline/histogram.hpp"
#include "thermoline/juttner.hpp"

namespace thermoline {

/// Registration physics applied per emission event. Intensity weighting is
/// the energy-per-observer-time boost (1-beta^2)^2/(1-beta cos_theta)^3;
/// counting weighting is the wave-arrival-rate factor (1-beta cos_theta);
/// unweighted is a diagnostic without an analytic oracle.
enum class WeightMode { intensity, counting, unweighted };

struct SimulationSpec {
  EnsembleParams params;
  WeightMode mode = WeightMode::intensity;
  std::uint64_t n_samples = 0;
  double x_lo = 0.0;  // histogram range; 0 < x_lo < 1 < x_hi
  double x_hi = 0.0;
  int bins = 0;
  std::uint64_t seed = 0;
  std::uint64_t chunk_size = 65536;

  void validate() const;  // throws std::invalid_argument
};

/// Histogram range covering all frequency ratios reachable below the given
/// Juttner speed quantile (default: 99.99% of the ensemble).
struct HistogramRange {
  double x_lo;
  double x_hi;
};
HistogramRange default_histogram_range(double alpha, double quantile = 0.9999);

struct SimulationResult {
  WeightedHistogram histogram;
  std::uint64_t n_samples = 0;
  double total_weight = 0.0;
  double effective_sample_size = 0.0;  // (sum w)^2 / sum w^2
  double mean_x = 0.0;                 // weighted mean over all samples
  double mean_x_error = 0.0;           // ratio-estimator standard error

  bool operator==(const SimulationResult&) const = default;
};

/// Brute-force realization of the ensemble average: draw (beta, cos_theta)
/// pairs, convert to the observed frequency ratio, weight per the chosen
/// registration mode and histogram. Work is chunked, one random stream per
/// chunk, chunks merged in index order, so the result is bit-identical for
/// any worker count. max_threads = 0 picks the hardware default; the
/// THERMOLINE_THREADS environment variable caps it.
SimulationResult simulate_spectrum(const SimulationSpec& spec,
                                   unsigned max_threads = 0);

struct DistanceReport {
  double l1 = 0.0;            // |normalized histogram - bin-integrated density|
  double chi2_per_bin = 0.0;  // reduced chi^2 against sum-sq-weight errors
  std::vector<double> bin_z2;  // per-bin squared pulls
};

/// Compares the accumulated histogram against a reference density over the
/// histogram range. Throws std::invalid_argument on an empty histogram.
DistanceReport histogram_distance(const SimulationResult& result,
                                  const std::function<double(double)>& density);

}  // namespace thermoline
