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

#include "divbound/measures.hpp"

#include <cmath>
#include <string>

#include "divbound/error.hpp"
#include "divbound/numeric.hpp"

namespace divbound {
namespace {

double checked(double value, std::string_view what) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::kNonFiniteResult,
                std::string(what) + " is not finite for this input");
  }
  return value;
}

template <typename Term>
double sum_terms(const Distribution& p, const Distribution& q, const Term& term) {
  require_same_length(p, q);
  return pairwise_sum(p.size(), [&](std::size_t i) { return term(p[i], q[i]); });
}

double kl(const Distribution& p, const Distribution& q) {
  return sum_terms(p, q, [](double a, double b) { return a * std::log(a / b); });
}

double chi2(const Distribution& p, const Distribution& q) {
  return sum_terms(p, q, [](double a, double b) {
    const double d = a - b;
    return d * d / b;
  });
}

// ln|e^u - 1| without overflow for large |u|.
double log_abs_expm1(double u) {
  if (std::fabs(u) < 1.0) return std::log(std::fabs(std::expm1(u)));
  if (u > 0.0) return u + std::log1p(-std::exp(-u));
  return std::log1p(-std::exp(u));
}

}  // namespace

std::string_view to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::kBhattacharya: return "bhattacharya";
    case MeasureKind::kHellinger: return "hellinger";
    case MeasureKind::kChi2: return "chi2";
    case MeasureKind::kKl: return "kl";
    case MeasureKind::kTriangular: return "triangular";
    case MeasureKind::kHarmonicMean: return "harmonic_mean";
    case MeasureKind::kJDivergence: return "j_divergence";
    case MeasureKind::kSymChi2: return "sym_chi2";
    case MeasureKind::kDeltaStar: return "delta_star";
    case MeasureKind::kPsiStar: return "psi_star";
    case MeasureKind::kRhoDelta: return "rho_delta";
    case MeasureKind::kRhoPsi: return "rho_psi";
  }
  return "unknown";
}

std::optional<MeasureKind> parse_measure(std::string_view name) {
  for (MeasureKind kind : kAllMeasures) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

bool is_similarity(MeasureKind kind) {
  return kind == MeasureKind::kBhattacharya || kind == MeasureKind::kHarmonicMean;
}

double divergence(MeasureKind kind, const Distribution& p, const Distribution& q) {
  double value = 0.0;
  switch (kind) {
    case MeasureKind::kBhattacharya:
      value = sum_terms(p, q, [](double a, double b) { return std::sqrt(a * b); });
      break;
    case MeasureKind::kHellinger:
      // Half the squared distance between root vectors; equals 1 - B on the simplex.
      value = 0.5 * sum_terms(p, q, [](double a, double b) {
                const double d = std::sqrt(a) - std::sqrt(b);
                return d * d;
              });
      break;
    case MeasureKind::kChi2:
      value = chi2(p, q);
      break;
    case MeasureKind::kKl:
      value = kl(p, q);
      break;
    case MeasureKind::kTriangular:
      value = sum_terms(p, q, [](double a, double b) {
        const double d = a - b;
        return d * d / (a + b);
      });
      break;
    case MeasureKind::kHarmonicMean:
      value = sum_terms(p, q, [](double a, double b) { return 2.0 * a * b / (a + b); });
      break;
    case MeasureKind::kJDivergence:
      value = sum_terms(p, q, [](double a, double b) { return (a - b) * std::log(a / b); });
      break;
    case MeasureKind::kSymChi2:
      value = sum_terms(p, q, [](double a, double b) {
        const double d = a - b;
        return d * d * (a + b) / (a * b);
      });
      break;
    case MeasureKind::kDeltaStar:
      value = 2.0 * sum_terms(p, q, [](double a, double b) {
                const double t = (a - b) / (a + b);
                return b * t * t;
              });
      break;
    case MeasureKind::kPsiStar:
      value = sum_terms(p, q, [](double a, double b) {
        const double d = a - b;
        return d * d * (a * a + b * b) / (a * a * b);
      });
      break;
    case MeasureKind::kRhoDelta:
      value = sum_terms(p, q, [](double a, double b) {
        const double t = (a - b) / (a + b);
        return t * t * (a + 3.0 * b);
      });
      break;
    case MeasureKind::kRhoPsi:
      value = divergence(MeasureKind::kSymChi2, p, q) +
              divergence(MeasureKind::kPsiStar, p, q);
      break;
  }
  return checked(value, to_string(kind));
}

double phi_s(double s, const Distribution& p, const Distribution& q) {
  if (!std::isfinite(s)) throw Error(ErrorCode::kBadParameter, "s must be finite");
  if (s == 0.0) return checked(kl(q, p), "phi_s");
  if (s == 1.0) return checked(kl(p, q), "phi_s");
  // Each term is p^s q^(1-s) - s p - (1-s) q; the linear part sums to one, so
  // this is the textbook form with the -1 distributed termwise. Written as
  // q (x^s - 1) - s (p - q) with x = p/q so the leading O(p - q) parts cancel
  // without carrying the rounding of log p and log q separately.
  const double sum = sum_terms(p, q, [s](double a, double b) {
    if (a == b) return 0.0;
    return b * std::expm1(s * std::log(a / b)) - s * (a - b);
  });
  return checked(sum / (s * (s - 1.0)), "phi_s");
}

double rho_phi_s(double s, const Distribution& p, const Distribution& q) {
  if (!std::isfinite(s)) throw Error(ErrorCode::kBadParameter, "s must be finite");
  if (s == 1.0) {
    return checked(
        sum_terms(p, q, [](double a, double b) { return (a - b) * std::log(a / b); }),
        "rho_phi_s");
  }
  const double sum = sum_terms(p, q, [s](double a, double b) {
    return (a - b) * std::exp((s - 1.0) * (std::log(a) - std::log(b)));
  });
  return checked(sum / (s - 1.0), "rho_phi_s");
}

double power_mean(double p, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw Error(ErrorCode::kBadParameter, "power_mean needs positive arguments");
  }
  if (a == b) return a;
  // Work with t = ln(b/a) so nearby arguments keep their precision.
  const double t = std::log(b) - std::log(a);
  double log_ratio = 0.0;  // ln(L / a)
  if (p == -1.0) {
    log_ratio = log_abs_expm1(t) - std::log(std::fabs(t));
  } else if (p == 0.0) {
    log_ratio = t / -std::expm1(-t) - 1.0;
  } else {
    const double u = (p + 1.0) * t;
    log_ratio = (log_abs_expm1(u) - std::log(std::fabs(p + 1.0)) - log_abs_expm1(t)) / p;
  }
  const double value = a * std::exp(log_ratio);
  return std::clamp(value, std::min(a, b), std::max(a, b));
}

}  // namespace divbound
