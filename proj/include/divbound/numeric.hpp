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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>

namespace divbound {

inline constexpr std::size_t kPairwiseBlock = 32;

/// Sums term(i) for i in [begin, end). Ranges longer than kPairwiseBlock are
/// split in half recursively, so rounding error grows as O(log n).
template <typename Term>
double pairwise_sum(std::size_t begin, std::size_t end, const Term& term) {
  if (end - begin <= kPairwiseBlock) {
    double acc = 0.0;
    for (std::size_t i = begin; i < end; ++i) acc += term(i);
    return acc;
  }
  const std::size_t mid = begin + (end - begin) / 2;
  return pairwise_sum(begin, mid, term) + pairwise_sum(mid, end, term);
}

template <typename Term>
double pairwise_sum(std::size_t n, const Term& term) {
  return pairwise_sum(std::size_t{0}, n, term);
}

/// Compensated (Kahan-Babuska) sum.
inline double kahan_sum(std::span<const double> values) {
  double sum = 0.0;
  double comp = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

/// Scale-aware comparison tolerance: tol * max(1, |a|, |b|).
inline double scaled_tolerance(double tol, double a, double b) {
  return tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

}  // namespace divbound
