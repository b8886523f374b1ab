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

#include <functional>
#include <string>
#include <vector>

#include "divbound/simplex.hpp"

namespace divbound {

using ScalarFn = std::function<double(double)>;

/// Convex normalized generator f on (0, inf) with analytic derivatives.
struct Generator {
  std::string name;
  ScalarFn f;
  ScalarFn f1;
  ScalarFn f2;
};

/// f(x) = (x - 1)^2 / (x + 1); C_f is the triangular discrimination.
Generator triangular_generator();

/// f(x) = (x - 1)^2 (x + 1) / x; C_f is the symmetric chi-square divergence.
Generator sym_chi2_generator();

/// Generator of the type-s relative information, normalized so that
/// f(1) = f'(1) = 0 and f''(x) = x^(s - 2). Logarithmic at s = 0 and s = 1.
Generator phi_s_generator(double s);

/// Upper-bound constants for C_f over a ratio range.
struct BoundSet {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  RatioRange range;
};

/// sum q_i f(p_i / q_i)
double c_f(const Generator& gen, const Distribution& p, const Distribution& q);

/// sum (p_i - q_i) f'(p_i / q_i)
double rho_c_f(const Generator& gen, const Distribution& p, const Distribution& q);

/// alpha = (R - r)^2 gamma / 4, beta = secant of f at 1, gamma = divided
/// difference of f'. A collapsed range (r == R) yields (0, 0, f''(1)).
BoundSet bound_set(const Generator& gen, const RatioRange& range);

// The three gaps below are differences of quantities defined above, evaluated
// term by term. Each term is nonnegative for convex f and vanishes exactly at
// a ratio equal to r or R, so the two-point case gives an exact zero instead
// of the cancellation residue of two large sums.

/// beta(r, R) - C_f(P||Q)
double secant_gap(const Generator& gen, const Distribution& p, const Distribution& q,
                  const RatioRange& range);

/// rho_{C_f}(P||Q) - C_f(P||Q)
double tangent_gap(const Generator& gen, const Distribution& p, const Distribution& q);

/// (R - 1)(1 - r) - chi2(P||Q) = sum q_i (R - x_i)(x_i - r)
double endpoint_gap(const Distribution& p, const Distribution& q, const RatioRange& range);

/// Closed-form alpha/beta/gamma for the type-s relative information
/// (logarithmic branches at s = 0 and s = 1 for beta, s = 1 for gamma).
BoundSet phi_s_bound_set(double s, const RatioRange& range);

enum class GeneratorIssue {
  kNormalizationViolation,
  kConvexityViolation,
  kFirstDerivativeMismatch,
  kSecondDerivativeMismatch,
  kNonFinite,
};

std::string_view to_string(GeneratorIssue issue);

struct GeneratorReport {
  double f_at_one = 0.0;
  double f2_at_one = 0.0;
  double min_f2 = 0.0;
  double max_rel_err_f1 = 0.0;
  double max_rel_err_f2 = 0.0;
  std::vector<GeneratorIssue> issues;

  bool passed() const noexcept { return issues.empty(); }
};

inline constexpr double kNormalizationTolerance = 1e-12;
inline constexpr double kDerivativeTolerance = 1e-6;
inline constexpr int kCheckGridPoints = 200;

/// Normalization, convexity and finite-difference checks over 200
/// log-spaced points in [1e-3, 1e3]. Derivative error is
/// |fd - analytic| / max(1, |analytic|).
GeneratorReport check_generator(const Generator& gen);

}  // namespace divbound
