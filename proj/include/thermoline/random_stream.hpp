// Copyright (c) 2026 thermoline contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>

namespace thermoline {

/// Counter-based uniform generator: the k-th output is a pure function of
/// (seed, stream_id, k), so any (seed, stream_id) pair reproduces the same
/// sequence on every platform and distinct stream ids give independent
/// streams for parallel chunks. The mixer is the splitmix64 finalizer.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0)
      : seed_(seed), stream_id_(stream_id) {
    const std::uint64_t h1 = mix(seed + 0x9e3779b97f4a7c15ull);
    const std::uint64_t h2 = mix(stream_id + 0xd1b54a32d192ed03ull);
    base_ = mix(h1 ^ (h2 * 0xff51afd7ed558ccdull));
  }

  std::uint64_t next_u64() {
    return mix(base_ + (++position_) * 0x9e3779b97f4a7c15ull);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1]; safe to feed a logarithm.
  double next_open() { return 1.0 - next_double(); }

  /// Standard normal (Box-Muller, cosine branch; two uniforms per call).
  double next_normal() {
    const double r = std::sqrt(-2.0 * std::log(next_open()));
    return r * std::cos(2.0 * kPi * next_double());
  }

  /// Unit-rate exponential.
  double next_exponential() { return -std::log1p(-next_double()); }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }
  std::uint64_t position() const { return position_; }

 private:
  static constexpr double kPi = 3.14159265358979323846;

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t base_;
  std::uint64_t position_ = 0;
};

}  // namespace thermoline
