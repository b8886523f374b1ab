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

#include "divbound/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "divbound/error.hpp"
#include "divbound/numeric.hpp"

namespace divbound {

RatioRange RatioRange::make(double lower, double upper) {
  if (!(lower > 0.0) || !(lower <= 1.0) || !(upper >= 1.0) || !std::isfinite(upper)) {
    std::ostringstream msg;
    msg << "ratio range requires 0 < r <= 1 <= R < inf, got r=" << lower << " R=" << upper;
    throw Error(ErrorCode::kInvalidRange, msg.str());
  }
  return RatioRange{lower, upper};
}

Distribution validate(std::span<const double> values) {
  if (values.size() < 2) {
    throw Error(ErrorCode::kTooShort, "distribution needs at least 2 entries, got " +
                                          std::to_string(values.size()));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(ErrorCode::kNonFinite, "entry " + std::to_string(i + 1) + " is not finite");
    }
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= 0.0) {
      std::ostringstream msg;
      msg << "entry " << i + 1 << " is not strictly positive (" << values[i] << ")";
      throw Error(ErrorCode::kNonPositiveEntry, msg.str());
    }
  }
  const double total = kahan_sum(values);
  if (std::fabs(total - 1.0) > kSumTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "entries sum to " << total << ", expected 1 within " << kSumTolerance;
    throw Error(ErrorCode::kSumMismatch, msg.str());
  }
  return Distribution(std::vector<double>(values.begin(), values.end()));
}

void require_same_length(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::kLengthMismatch, "distribution lengths differ: " +
                                                std::to_string(p.size()) + " vs " +
                                                std::to_string(q.size()));
  }
}

RatioRange ratio_range(const Distribution& p, const Distribution& q) {
  require_same_length(p, q);
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double x = p[i] / q[i];
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  return RatioRange{std::min(lo, 1.0), std::max(hi, 1.0)};
}

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Distribution sample(std::size_t n, std::uint64_t seed, double concentration) {
  if (n < 2) {
    throw Error(ErrorCode::kBadDimension, "sample dimension must be >= 2, got " + std::to_string(n));
  }
  if (!(concentration > 0.0) || !std::isfinite(concentration)) {
    throw Error(ErrorCode::kBadParameter, "concentration must be positive and finite");
  }
  std::mt19937_64 rng(seed);
  std::gamma_distribution<double> gamma(concentration, 1.0);
  std::vector<double> x(n);
  for (auto& v : x) v = gamma(rng);

  double total = kahan_sum(x);
  if (!(total > 0.0) || !std::isfinite(total)) {
    std::fill(x.begin(), x.end(), 1.0);
    total = static_cast<double>(n);
  }
  for (auto& v : x) v /= total;

  double excess = 0.0;
  for (auto& v : x) {
    if (v < kSampleFloor) {
      excess += kSampleFloor - v;
      v = kSampleFloor;
    }
  }
  auto largest = std::max_element(x.begin(), x.end());
  *largest -= excess;

  // Division leaves the sum within a few ulps of one; fold the residual into
  // the largest entry as well.
  *largest += 1.0 - kahan_sum(x);
  return validate(x);
}

}  // namespace divbound
