// Copyright (c) 2026 thermoline contributors
// SPDX-License-Identifier: Apache-2.0
#include "thermoline/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "thermoline/kinematics.hpp"
#include "thermoline/quadrature.hpp"
#include "thermoline/random_stream.hpp"

namespace thermoline {

void SimulationSpec::validate() const {
  params.validate();
  if (n_samples < 1) {
    throw std::invalid_argument("simulate: n_samples must be >= 1");
  }
  if (!(x_lo > 0.0 && x_lo < 1.0 && x_hi > 1.0)) {
    throw std::invalid_argument(
        "simulate: histogram range must satisfy 0 < x_lo < 1 < x_hi");
  }
  if (bins < 1) throw std::invalid_argument("simulate: bins must be >= 1");
  if (chunk_size < 1) {
    throw std::invalid_argument("simulate: chunk_size must be >= 1");
  }
}

HistogramRange default_histogram_range(double alpha, double quantile) {
  if (!(alpha > 0.0)) {
    throw std::domain_error("default_histogram_range: alpha must be > 0");
  }
  if (!(quantile > 0.0 && quantile < 1.0)) {
    throw std::domain_error("default_histogram_range: quantile in (0,1)");
  }
  // Invert the Juttner CDF in the scaled variable s = alpha (gamma - 1),
  // whose density (1 + s/alpha) sqrt(s (s + 2 alpha)) e^{-s} keeps its mass
  // at s ~ O(1) for every alpha; bisecting in beta would have to chase a
  // spike of width ~ 1/alpha instead.
  auto shape = [alpha](double s) {
    return (1.0 + s / alpha) * std::sqrt(s * (s + 2.0 * alpha)) * std::exp(-s);
  };
  QuadratureOptions opts;
  opts.rel_tol = 1e-10;
  const double s_max = 80.0;  // e^{-80} is far below any quantile of interest
  const double total = integrate_adaptive(shape, 0.0, s_max, opts).value;
  double lo = 0.0, hi = s_max;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double mass = integrate_adaptive(shape, 0.0, mid, opts).value;
    (mass < quantile * total ? lo : hi) = mid;
  }
  const double t = 0.5 * (lo + hi) / alpha;  // gamma - 1 at the quantile
  const double beta_q = std::sqrt(t * (t + 2.0)) / (1.0 + t);
  const DopplerSupport support = doppler_support(beta_q);
  return {support.x_min, support.x_max};
}

namespace {

unsigned worker_count(unsigned max_threads, std::uint64_t n_chunks) {
  unsigned n = max_threads;
  if (n == 0) {
    n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
  }
  if (const char* env = std::getenv("THERMOLINE_THREADS")) {
    const long cap = std::atol(env);
    if (cap >= 1 && static_cast<unsigned long>(cap) < n) {
      n = static_cast<unsigned>(cap);
    }
  }
  if (n_chunks < n) n = static_cast<unsigned>(n_chunks);
  return n < 1 ? 1 : n;
}

struct ChunkAccumulator {
  WeightedHistogram histogram;
  double w = 0.0, w2 = 0.0;
  double wx = 0.0, w2x = 0.0, w2x2 = 0.0;
};

}  // namespace

SimulationResult simulate_spectrum(const SimulationSpec& spec,
                                   unsigned max_threads) {
  spec.validate();
  const double alpha = spec.params.alpha;
  const JuttnerSampler sampler(alpha);
  const WeightedHistogram empty =
      WeightedHistogram::uniform(spec.x_lo, spec.x_hi, spec.bins);

  const std::uint64_t n_chunks =
      (spec.n_samples + spec.chunk_size - 1) / spec.chunk_size;
  std::vector<ChunkAccumulator> chunks(
      n_chunks, ChunkAccumulator{empty, 0.0, 0.0, 0.0, 0.0, 0.0});

  auto run_chunk = [&](std::uint64_t index) {
    ChunkAccumulator& acc = chunks[index];
    RandomStream stream(spec.seed, index);
    const std::uint64_t begin = index * spec.chunk_size;
    const std::uint64_t count =
        std::min<std::uint64_t>(spec.chunk_size, spec.n_samples - begin);
    for (std::uint64_t i = 0; i < count; ++i) {
      const double beta = sampler.sample_beta(stream);
      const double cos_theta = 2.0 * stream.next_double() - 1.0;
      const double om = (1.0 - beta) * (1.0 + beta);
      const double d = 1.0 - beta * cos_theta;
      const double x = std::sqrt(om) / d;
      double w = 1.0;
      switch (spec.mode) {
        case WeightMode::intensity:
          w = om * om / (d * d * d);
          break;
        case WeightMode::counting:
          w = d;
          break;
        case WeightMode::unweighted:
          break;
      }
      acc.histogram.add(x, w);
      acc.w += w;
      acc.w2 += w * w;
      acc.wx += w * x;
      acc.w2x += w * w * x;
      acc.w2x2 += w * w * x * x;
    }
  };

  const unsigned workers = worker_count(max_threads, n_chunks);
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < n_chunks; ++i) run_chunk(i);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          const std::uint64_t i = next.fetch_add(1);
          if (i >= n_chunks) return;
          run_chunk(i);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }

  // Deterministic reduction in chunk index order.
  SimulationResult out{empty};
  out.n_samples = spec.n_samples;
  double w = 0.0, w2 = 0.0, wx = 0.0, w2x = 0.0, w2x2 = 0.0;
  for (const ChunkAccumulator& acc : chunks) {
    out.histogram.merge(acc.histogram);
    w += acc.w;
    w2 += acc.w2;
    wx += acc.wx;
    w2x += acc.w2x;
    w2x2 += acc.w2x2;
  }
  out.total_weight = w;
  out.effective_sample_size = w2 > 0.0 ? w * w / w2 : 0.0;
  out.mean_x = w > 0.0 ? wx / w : 0.0;
  if (w > 0.0) {
    // Ratio-estimator variance: sum w^2 (x - mean)^2 / (sum w)^2.
    const double m = out.mean_x;
    const double s2 = w2x2 - 2.0 * m * w2x + m * m * w2;
    out.mean_x_error = s2 > 0.0 ? std::sqrt(s2) / w : 0.0;
  }
  return out;
}

DistanceReport histogram_distance(
    const SimulationResult& result,
    const std::function<double(double)>& density) {
  const WeightedHistogram& h = result.histogram;
  if (result.n_samples == 0 || result.total_weight <= 0.0) {
    throw std::invalid_argument("histogram_distance: empty histogram");
  }
  QuadratureOptions opts;
  opts.rel_tol = 1e-10;
  opts.abs_tol = 1e-30;

  std::vector<double> q(h.bins());
  double in_range = 0.0, q_total = 0.0;
  for (std::size_t i = 0; i < h.bins(); ++i) {
    q[i] = integrate_adaptive(density, h.bin_edges()[i], h.bin_edges()[i + 1],
                              opts)
               .value;
    q_total += q[i];
    in_range += h.weighted_counts()[i];
  }
  if (!(in_range > 0.0) || !(q_total > 0.0)) {
    throw std::invalid_argument("histogram_distance: empty histogram");
  }

  // L1 compares the two shapes, each normalized over the histogram range;
  // chi^2 compares absolute bin weights against n * bin integral with the
  // accumulated sum of squared weights as the variance estimate.
  DistanceReport report;
  report.bin_z2.reserve(h.bins());
  const double n = static_cast<double>(result.n_samples);
  double chi2 = 0.0;
  for (std::size_t i = 0; i < h.bins(); ++i) {
    report.l1 += std::abs(h.weighted_counts()[i] / in_range - q[i] / q_total);
    const double var = h.sum_sq_weights()[i];
    const double resid = h.weighted_counts()[i] - n * q[i];
    const double pull2 = var > 0.0 ? resid * resid / var : 0.0;
    report.bin_z2.push_back(pull2);
    chi2 += pull2;
  }
  report.chi2_per_bin = chi2 / static_cast<double>(h.bins());
  return report;
}

}  // namespace thermoline
