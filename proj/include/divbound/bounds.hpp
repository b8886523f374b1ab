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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "divbound/csiszar.hpp"
#include "divbound/simplex.hpp"

namespace divbound {

/// Link tolerance: slack >= -kLinkTolerance * max(1, |lhs|, |rhs|).
inline constexpr double kLinkTolerance = 1e-9;

enum class Family { kDelta, kPsi, kPhiSBase };

std::string_view to_string(Family family);

/// g(x) = x^(2-s) f''(x) for the family's generator.
double g_function(Family family, double s, double x);

struct ExtremaPair {
  double m = 0.0;
  double M = 0.0;
  std::optional<double> argmin;  // empty when the infimum is not attained
  std::optional<double> argmax;
  bool sup_unbounded = false;  // M is +inf and must not enter arithmetic
};

/// Infimum and supremum of g over [r, R], or over (0, inf) when `range` is
/// empty. The unbounded case is supported for s in {0, 1/2, 1} only.
ExtremaPair extrema_g(Family family, double s, const std::optional<RatioRange>& range);

struct ChainLink {
  std::string label;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  bool pass = true;
  bool equality = false;  // |slack| within tolerance
};

bool link_passes(double lhs, double rhs, double tolerance_scale = 1.0);

struct BoundChainReport {
  std::string chain_id;
  bool applicable = true;
  std::string note;
  std::optional<double> s;
  RatioRange range;
  std::vector<std::pair<std::string, double>> values;  // measure values used
  std::vector<ChainLink> links;

  void add_link(std::string label, double lhs, double rhs);
  void add_value(std::string name, double value);
  bool passed(double tolerance_scale = 1.0) const;
};

/// Eqs. 19-23 for an arbitrary generator with the empirical ratio range.
BoundChainReport theorem31_chain(const Generator& gen, const Distribution& p,
                                 const Distribution& q);

/// Closed-form alpha/beta/gamma for the triangular discrimination.
BoundSet delta_bound_set(const RatioRange& range);

/// Closed-form alpha/beta/gamma for the symmetric chi-square divergence:
/// beta = (R - 1)(1 - r)(1 + rR) / (rR), gamma = 2 + (R + r) / (r R)^2.
BoundSet psi_bound_set(const RatioRange& range);

/// Power-mean expression 2/L_2(r,R) - 1/L_1(r,R) printed for gamma_psi.
/// Kept for the errata report; it does not equal the divided difference.
double psi_gamma_power_mean_form(const RatioRange& range);

/// The printed beta_psi = (R - 1)(1 - r)(R + r). Not the secant value of
/// f_psi; errata report only.
double psi_beta_printed_form(const RatioRange& range);

/// The T3.1 chain with the closed-form triangular constants.
BoundChainReport delta_closed_form_chain(const Distribution& p, const Distribution& q);

/// The T3.1 chain with the closed-form symmetric chi-square constants.
BoundChainReport psi_closed_form_chain(const Distribution& p, const Distribution& q);

/// m Phi_s <= C_f <= M Phi_s and the rho- and beta-difference sandwiches,
/// with m and M from extrema_g over ratio_range(P, Q).
BoundChainReport theorem32_chain(Family family, double s, const Distribution& p,
                                 const Distribution& q);

enum class PropositionId { kP41, kP42, kP43, kP44, kP45, kP51, kP52, kP53, kP54, kP55, kHmRemark };

inline constexpr PropositionId kAllPropositions[] = {
    PropositionId::kP41, PropositionId::kP42, PropositionId::kP43, PropositionId::kP44,
    PropositionId::kP45, PropositionId::kP51, PropositionId::kP52, PropositionId::kP53,
    PropositionId::kP54, PropositionId::kP55, PropositionId::kHmRemark,
};

std::string_view to_string(PropositionId id);
std::optional<PropositionId> parse_proposition(std::string_view name);

BoundChainReport proposition_chain(PropositionId id, const Distribution& p,
                                   const Distribution& q);

}  // namespace divbound
