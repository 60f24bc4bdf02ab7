// Copyright (c) 2026 thermoline contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

namespace thermoline {

/// Weighted histogram with half-open bins [e_i, e_{i+1}); the last bin also
/// accepts values equal to the upper edge. Out-of-range weight is recorded,
/// never dropped, and the squared weights are kept per bin for error bars.
class WeightedHistogram {
 public:
  explicit WeightedHistogram(std::vector<double> edges);
  static WeightedHistogram uniform(double lo, double hi, int bins);

  /// Adds one sample; throws std::invalid_argument on NaN value/weight or
  /// negative weight.
  void add(double value, double weight);

  /// Adds another histogram with identical edges. Merging chunk results in a
  /// fixed order keeps parallel accumulation bit-reproducible.
  void merge(const WeightedHistogram& other);

  std::size_t bins() const { return counts_.size(); }
  const std::vector<double>& bin_edges() const { return edges_; }
  const std::vector<double>& weighted_counts() const { return counts_; }
  const std::vector<double>& sum_sq_weights() const { return sumw2_; }
  double total_weight() const { return total_weight_; }
  double out_of_range_weight() const { return out_of_range_; }

  bool operator==(const WeightedHistogram&) const = default;

 private:
  std::vector<double> edges_;
  std::vector<double> counts_;
  std::vector<double> sumw2_;
  double total_weight_ = 0.0;
  double out_of_range_ = 0.0;
};

}  // namespace thermoline
