// Copyright (c) 2026 thermoline contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

#include "thermoline/monte_carlo.hpp"
#include "thermoline/spectrum.hpp"

namespace thermoline::cli {

// Exit codes: 0 success, 1 computation/verification failure, 2 usage or
// configuration error, 3 I/O error.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decimal formatting used in every artifact: 17 significant digits, enough
/// to round-trip a double exactly.
std::string format_value(double v);

/// Writes content to path, throwing IoError when the file cannot be
/// created or fully written.
void write_file(const std::string& path, const std::string& content);

/// Spectrum CSV (`x,density[,log_density]`), deterministic byte-for-byte
/// for fixed inputs. omega0/intensity0 from params rescale the columns.
std::string spectrum_csv(const EnsembleParams& params, SpectralKind kind,
                         double x_min, double x_max, int points,
                         bool log_density);

/// Histogram CSV (`x_lo,x_hi,weight,weight_err`).
std::string histogram_csv(const WeightedHistogram& histogram);

/// Full command-line entry point.
int run(int argc, const char* const* argv);

}  // namespace thermoline::cli
