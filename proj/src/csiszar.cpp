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

#include "divbound/csiszar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "divbound/error.hpp"
#include "divbound/numeric.hpp"

namespace divbound {
namespace {

// f_{Phi_s}(x) via expm1 so the O((x-1)^2) result near x = 1 keeps its
// relative accuracy. log(x), not log1p(x - 1): the latter drops tiny x.
double phi_f(double s, double x) {
  const double u = x - 1.0;
  if (s == 0.0) return u - std::log(x);
  if (s == 1.0) return x * std::log(x) - u;
  return (std::expm1(s * std::log(x)) - s * u) / (s * (s - 1.0));
}

double checked(double value, std::string_view what, const Generator& gen) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::kNonFiniteResult,
                std::string(what) + " with generator " + gen.name + " is not finite");
  }
  return value;
}

std::string format_s(double s) {
  std::ostringstream out;
  out << s;
  return out.str();
}

}  // namespace

Generator triangular_generator() {
  return Generator{
      "f_delta",
      [](double x) { return (x - 1.0) * (x - 1.0) / (x + 1.0); },
      [](double x) { return (x - 1.0) * (x + 3.0) / ((x + 1.0) * (x + 1.0)); },
      [](double x) { return 8.0 / ((x + 1.0) * (x + 1.0) * (x + 1.0)); },
  };
}

Generator sym_chi2_generator() {
  return Generator{
      "f_psi",
      [](double x) { return (x - 1.0) * (x - 1.0) * (x + 1.0) / x; },
      [](double x) { return (x - 1.0) * (2.0 * x * x + x + 1.0) / (x * x); },
      [](double x) { return 2.0 * (x * x * x + 1.0) / (x * x * x); },
  };
}

Generator phi_s_generator(double s) {
  if (!std::isfinite(s)) throw Error(ErrorCode::kBadParameter, "s must be finite");
  const std::string name = "f_phi[s=" + format_s(s) + "]";
  const auto f = [s](double x) { return phi_f(s, x); };
  if (s == 0.0) {
    return Generator{
        name,
        f,
        [](double x) { return 1.0 - 1.0 / x; },
        [](double x) { return 1.0 / (x * x); },
    };
  }
  if (s == 1.0) {
    return Generator{
        name,
        f,
        [](double x) { return std::log(x); },
        [](double x) { return 1.0 / x; },
    };
  }
  return Generator{
      name,
      f,
      [s](double x) { return std::expm1((s - 1.0) * std::log(x)) / (s - 1.0); },
      [s](double x) { return std::pow(x, s - 2.0); },
  };
}

double c_f(const Generator& gen, const Distribution& p, const Distribution& q) {
  require_same_length(p, q);
  const double value =
      pairwise_sum(p.size(), [&](std::size_t i) { return q[i] * gen.f(p[i] / q[i]); });
  return checked(value, "C_f", gen);
}

double rho_c_f(const Generator& gen, const Distribution& p, const Distribution& q) {
  require_same_length(p, q);
  const double value = pairwise_sum(
      p.size(), [&](std::size_t i) { return (p[i] - q[i]) * gen.f1(p[i] / q[i]); });
  return checked(value, "rho_C_f", gen);
}

BoundSet bound_set(const Generator& gen, const RatioRange& range) {
  const double r = range.lower;
  const double R = range.upper;
  if (range.degenerate()) return BoundSet{0.0, 0.0, gen.f2(1.0), range};
  const double width = R - r;
  const double beta = ((R - 1.0) * gen.f(r) + (1.0 - r) * gen.f(R)) / width;
  const double gamma = (gen.f1(R) - gen.f1(r)) / width;
  const double alpha = 0.25 * width * width * gamma;
  return BoundSet{checked(alpha, "alpha", gen), checked(beta, "beta", gen),
                  checked(gamma, "gamma", gen), range};
}

double secant_gap(const Generator& gen, const Distribution& p, const Distribution& q,
                  const RatioRange& range) {
  require_same_length(p, q);
  if (range.degenerate()) return 0.0;
  const double r = range.lower;
  const double R = range.upper;
  const double f_r = gen.f(r);
  const double f_R = gen.f(R);
  const double value = pairwise_sum(p.size(), [&](std::size_t i) {
    const double x = p[i] / q[i];
    const double f_x = gen.f(x);
    return q[i] * ((R - x) * (f_r - f_x) + (x - r) * (f_R - f_x));
  });
  return checked(value / (R - r), "secant gap", gen);
}

double tangent_gap(const Generator& gen, const Distribution& p, const Distribution& q) {
  require_same_length(p, q);
  const double value = pairwise_sum(p.size(), [&](std::size_t i) {
    const double x = p[i] / q[i];
    return q[i] * ((x - 1.0) * gen.f1(x) - gen.f(x));
  });
  return checked(value, "tangent gap", gen);
}

double endpoint_gap(const Distribution& p, const Distribution& q, const RatioRange& range) {
  require_same_length(p, q);
  const double r = range.lower;
  const double R = range.upper;
  return pairwise_sum(p.size(), [&](std::size_t i) {
    const double x = p[i] / q[i];
    return q[i] * (R - x) * (x - r);
  });
}

BoundSet phi_s_bound_set(double s, const RatioRange& range) {
  if (!std::isfinite(s)) throw Error(ErrorCode::kBadParameter, "s must be finite");
  const double r = range.lower;
  const double R = range.upper;
  if (range.degenerate()) return BoundSet{0.0, 0.0, 1.0, range};
  const double width = R - r;
  // Both secant terms are nonnegative, so no cancellation beyond phi_f's.
  const double beta = ((R - 1.0) * phi_f(s, r) + (1.0 - r) * phi_f(s, R)) / width;
  const double log_ratio = std::log(R) - std::log(r);
  const double gamma =
      s == 1.0 ? log_ratio / width
               : std::pow(r, s - 1.0) * std::expm1((s - 1.0) * log_ratio) / (width * (s - 1.0));
  return BoundSet{0.25 * width * width * gamma, beta, gamma, range};
}

std::string_view to_string(GeneratorIssue issue) {
  switch (issue) {
    case GeneratorIssue::kNormalizationViolation: return "NormalizationViolation";
    case GeneratorIssue::kConvexityViolation: return "ConvexityViolation";
    case GeneratorIssue::kFirstDerivativeMismatch: return "FirstDerivativeMismatch";
    case GeneratorIssue::kSecondDerivativeMismatch: return "SecondDerivativeMismatch";
    case GeneratorIssue::kNonFinite: return "NonFinite";
  }
  return "Unknown";
}

GeneratorReport check_generator(const Generator& gen) {
  GeneratorReport report;
  report.f_at_one = gen.f(1.0);
  report.f2_at_one = gen.f2(1.0);
  report.min_f2 = std::numeric_limits<double>::infinity();

  bool finite = std::isfinite(report.f_at_one) && std::isfinite(report.f2_at_one);
  const double lo = std::log10(1e-3);
  const double hi = std::log10(1e3);
  for (int k = 0; k < kCheckGridPoints; ++k) {
    const double x = std::pow(10.0, lo + (hi - lo) * k / (kCheckGridPoints - 1));
    const double h = x * 1e-6;
    const double d1 = gen.f1(x);
    const double d2 = gen.f2(x);
    const double fd1 = (gen.f(x + h) - gen.f(x - h)) / (2.0 * h);
    const double fd2 = (gen.f1(x + h) - gen.f1(x - h)) / (2.0 * h);
    if (!std::isfinite(d1) || !std::isfinite(d2) || !std::isfinite(fd1) ||
        !std::isfinite(fd2)) {
      finite = false;
      continue;
    }
    report.min_f2 = std::min(report.min_f2, d2);
    report.max_rel_err_f1 =
        std::max(report.max_rel_err_f1, std::fabs(fd1 - d1) / std::max(1.0, std::fabs(d1)));
    report.max_rel_err_f2 =
        std::max(report.max_rel_err_f2, std::fabs(fd2 - d2) / std::max(1.0, std::fabs(d2)));
  }

  if (!finite) report.issues.push_back(GeneratorIssue::kNonFinite);
  if (!(std::fabs(report.f_at_one) <= kNormalizationTolerance)) {
    report.issues.push_back(GeneratorIssue::kNormalizationViolation);
  }
  if (!(report.min_f2 > 0.0)) report.issues.push_back(GeneratorIssue::kConvexityViolation);
  if (!(report.max_rel_err_f1 <= kDerivativeTolerance)) {
    report.issues.push_back(GeneratorIssue::kFirstDerivativeMismatch);
  }
  if (!(report.max_rel_err_f2 <= kDerivativeTolerance)) {
    report.issues.push_back(GeneratorIssue::kSecondDerivativeMismatch);
  }
  return report;
}

}  // namespace divbound
