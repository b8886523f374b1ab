// Copyright 2026 The divbound Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace divbound {

inline constexpr double kSumTolerance = 1e-9;
inline constexpr double kSampleFloor = 1e-12;

/// A strictly positive probability vector of length n >= 2 summing to one
/// within kSumTolerance. Only obtainable through validate() or sample().
class Distribution {
 public:
  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const noexcept { return probs_; }

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  explicit Distribution(std::vector<double> probs) : probs_(std::move(probs)) {}
  friend Distribution validate(std::span<const double> values);

  std::vector<double> probs_;
};

/// Bounds on the likelihood ratios p_i / q_i with 0 < lower <= 1 <= upper.
struct RatioRange {
  double lower = 1.0;
  double upper = 1.0;

  /// Throws Error(kInvalidRange) unless 0 < lower <= 1 <= upper < inf.
  static RatioRange make(double lower, double upper);

  bool degenerate() const noexcept { return lower == upper; }
  friend bool operator==(const RatioRange&, const RatioRange&) = default;
};

/// Checks membership in the open simplex. Never renormalizes.
Distribution validate(std::span<const double> values);

inline Distribution validate(const std::vector<double>& values) {
  return validate(std::span<const double>(values));
}

/// Throws Error(kLengthMismatch) if the two distributions differ in length.
void require_same_length(const Distribution& p, const Distribution& q);

/// Smallest and largest p_i / q_i, clamped so that lower <= 1 <= upper.
RatioRange ratio_range(const Distribution& p, const Distribution& q);

/// Draws from a symmetric Dirichlet(concentration) on the n-simplex.
/// Entries below kSampleFloor are raised to it; the excess mass is taken from
/// the largest entry so the floor survives normalization.
Distribution sample(std::size_t n, std::uint64_t seed, double concentration);

/// SplitMix64 finalizer; used for seed derivation.
std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace divbound
