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

#include <array>
#include <optional>
#include <string_view>

#include "divbound/simplex.hpp"

namespace divbound {

enum class MeasureKind {
  kBhattacharya,   // B = sum sqrt(p q)
  kHellinger,      // h = 1 - B
  kChi2,           // sum (p - q)^2 / q
  kKl,             // sum p ln(p / q)
  kTriangular,     // sum (p - q)^2 / (p + q)
  kHarmonicMean,   // W = sum 2 p q / (p + q)
  kJDivergence,    // K(P||Q) + K(Q||P)
  kSymChi2,        // chi2(P||Q) + chi2(Q||P)
  kDeltaStar,      // rho_delta - triangular
  kPsiStar,        // rho_psi - sym_chi2
  kRhoDelta,
  kRhoPsi,
};

inline constexpr std::array<MeasureKind, 12> kAllMeasures = {
    MeasureKind::kBhattacharya, MeasureKind::kHellinger,    MeasureKind::kChi2,
    MeasureKind::kKl,           MeasureKind::kTriangular,   MeasureKind::kHarmonicMean,
    MeasureKind::kJDivergence,  MeasureKind::kSymChi2,      MeasureKind::kDeltaStar,
    MeasureKind::kPsiStar,      MeasureKind::kRhoDelta,     MeasureKind::kRhoPsi,
};

std::string_view to_string(MeasureKind kind);
std::optional<MeasureKind> parse_measure(std::string_view name);

/// True for the measures that are similarities (1 at P = Q) rather than
/// divergences (0 at P = Q).
bool is_similarity(MeasureKind kind);

/// Closed-form value of the named measure.
double divergence(MeasureKind kind, const Distribution& p, const Distribution& q);

/// Relative information of type s. The branches s == 0 and s == 1 are chosen
/// by exact comparison and return K(Q||P) and K(P||Q).
double phi_s(double s, const Distribution& p, const Distribution& q);

/// (s - 1)^-1 sum (p_i - q_i)(p_i / q_i)^(s - 1); the s == 1 branch is J(P||Q).
double rho_phi_s(double s, const Distribution& p, const Distribution& q);

/// p-logarithmic power mean L_p(a, b). Returns a when a == b.
double power_mean(double p, double a, double b);

}  // namespace divbound
