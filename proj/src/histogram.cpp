// Copyright (c) 2026 thermoline contributors
// SPDX-License-Identifier: Apache-2.0
#include "thermoline/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace thermoline {

WeightedHistogram::WeightedHistogram(std::vector<double> edges)
    : edges_(std::move(edges)) {
  if (edges_.size() < 2) {
    throw std::invalid_argument("histogram: need at least two bin edges");
  }
  for (std::size_t i = 0; i + 1 < edges_.size(); ++i) {
    if (!(edges_[i] < edges_[i + 1])) {
      throw std::invalid_argument("histogram: edges must be strictly ascending");
    }
  }
  counts_.assign(edges_.size() - 1, 0.0);
  sumw2_.assign(edges_.size() - 1, 0.0);
}

WeightedHistogram WeightedHistogram::uniform(double lo, double hi, int bins) {
  if (bins < 1) throw std::invalid_argument("histogram: need at least one bin");
  std::vector<double> edges(static_cast<std::size_t>(bins) + 1);
  for (int i = 0; i <= bins; ++i) {
    edges[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / bins;
  }
  edges.back() = hi;
  return WeightedHistogram(std::move(edges));
}

void WeightedHistogram::add(double value, double weight) {
  if (std::isnan(value) || std::isnan(weight) || weight < 0.0) {
    throw std::invalid_argument("histogram: NaN sample or negative weight");
  }
  total_weight_ += weight;
  if (value < edges_.front() || value > edges_.back()) {
    out_of_range_ += weight;
    return;
  }
  std::size_t idx;
  if (value == edges_.back()) {
    idx = counts_.size() - 1;  // closed final bin
  } else {
    const auto it = std::upper_bound(edges_.begin(), edges_.end(), value);
    idx = static_cast<std::size_t>(it - edges_.begin()) - 1;
  }
  counts_[idx] += weight;
  sumw2_[idx] += weight * weight;
}

void WeightedHistogram::merge(const WeightedHistogram& other) {
  if (other.edges_ != edges_) {
    throw std::invalid_argument("histogram: merging incompatible bin edges");
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    counts_[i] += other.counts_[i];
    sumw2_[i] += other.sumw2_[i];
  }
  total_weight_ += other.total_weight_;
  out_of_range_ += other.out_of_range_;
}

}  // namespace thermoline
