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

#include "divbound/bounds.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "divbound/error.hpp"
#include "divbound/measures.hpp"
#include "divbound/numeric.hpp"

namespace divbound {
namespace {

double cube(double x) { return x * x * x; }

std::string format_s(double s) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), s);
  return std::string(buf, end);
}

// Sign-determining factor of g'(x): g' = -(positive) * bracket.
double g_bracket(Family family, double s, double x) {
  switch (family) {
    case Family::kDelta: return (s + 1.0) * x + (s - 2.0);
    case Family::kPsi: return (s - 2.0) * cube(x) + (s + 1.0);
    case Family::kPhiSBase: return 0.0;
  }
  return 0.0;
}

// Root of the bracket in [lo, hi], assuming a sign change. The bracket is
// monotone in x for s in (-1, 2).
double bisect_stationary(Family family, double s, double lo, double hi) {
  double f_lo = g_bracket(family, s, lo);
  for (int iter = 0; iter < 400 && hi - lo > 1e-12 * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = g_bracket(family, s, mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

bool is_special_s(double s) { return s == 0.0 || s == 0.5 || s == 1.0; }

// 2 sum (q_i - p_i) sqrt(q_i / p_i), the rho functional of Phi_{1/2}.
double rho_half(const Distribution& p, const Distribution& q) {
  return 2.0 * pairwise_sum(p.size(), [&](std::size_t i) {
           return (q[i] - p[i]) * std::sqrt(q[i] / p[i]);
         });
}

double beta_phi_half(const RatioRange& range) {
  const double a = std::sqrt(range.lower);
  const double b = std::sqrt(range.upper);
  return 4.0 * (b - 1.0) * (1.0 - a) / (b + a);
}

const Generator& delta_gen() {
  static const Generator gen = triangular_generator();
  return gen;
}

const Generator& psi_gen() {
  static const Generator gen = sym_chi2_generator();
  return gen;
}

const Generator& phi_minus_one_gen() {
  static const Generator gen = phi_s_generator(-1.0);
  return gen;
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::kDelta: return "delta";
    case Family::kPsi: return "psi";
    case Family::kPhiSBase: return "phi_s_base";
  }
  return "unknown";
}

double g_function(Family family, double s, double x) {
  switch (family) {
    case Family::kDelta: return 8.0 * std::pow(x, 2.0 - s) / cube(x + 1.0);
    case Family::kPsi: return 2.0 * std::pow(x, -1.0 - s) * (cube(x) + 1.0);
    case Family::kPhiSBase: return 1.0;
  }
  return 0.0;
}

ExtremaPair extrema_g(Family family, double s, const std::optional<RatioRange>& range) {
  if (!std::isfinite(s)) throw Error(ErrorCode::kBadParameter, "s must be finite");
  if (family == Family::kPhiSBase) {
    const double at = range ? range->lower : 1.0;
    return ExtremaPair{1.0, 1.0, at, at, false};
  }

  if (!range) {
    if (!is_special_s(s)) {
      throw Error(ErrorCode::kUnsupportedRegime,
                  "unbounded range is supported for s in {0, 1/2, 1} only, got s=" +
                      format_s(s));
    }
    const double x = bisect_stationary(family, s, 1e-6, 1e6);
    const double value = g_function(family, s, x);
    if (family == Family::kDelta) {
      // g vanishes at both ends of (0, inf); the infimum is not attained.
      return ExtremaPair{0.0, value, std::nullopt, x, false};
    }
    return ExtremaPair{value, std::numeric_limits<double>::infinity(), x, std::nullopt, true};
  }

  const double r = range->lower;
  const double R = range->upper;
  const double g_r = g_function(family, s, r);
  const double g_R = g_function(family, s, R);
  if (range->degenerate()) return ExtremaPair{g_r, g_r, r, r, false};
  if (s <= -1.0) return ExtremaPair{g_r, g_R, r, R, false};
  if (s >= 2.0) return ExtremaPair{g_R, g_r, R, r, false};

  ExtremaPair out = g_r <= g_R ? ExtremaPair{g_r, g_R, r, R, false}
                               : ExtremaPair{g_R, g_r, R, r, false};
  const double b_r = g_bracket(family, s, r);
  const double b_R = g_bracket(family, s, R);
  if ((b_r > 0.0) != (b_R > 0.0) || b_r == 0.0 || b_R == 0.0) {
    const double x = bisect_stationary(family, s, r, R);
    const double g_x = g_function(family, s, x);
    // Delta has an interior maximum, psi an interior minimum.
    if (family == Family::kDelta && g_x > out.M) {
      out.M = g_x;
      out.argmax = x;
    } else if (family == Family::kPsi && g_x < out.m) {
      out.m = g_x;
      out.argmin = x;
    }
  }
  return out;
}

bool link_passes(double lhs, double rhs, double tolerance_scale) {
  return rhs - lhs >= -tolerance_scale * scaled_tolerance(kLinkTolerance, lhs, rhs);
}

void BoundChainReport::add_link(std::string label, double lhs, double rhs) {
  ChainLink link;
  link.label = std::move(label);
  link.lhs = lhs;
  link.rhs = rhs;
  link.slack = rhs - lhs;
  link.pass = link_passes(lhs, rhs);
  link.equality = std::fabs(link.slack) <= scaled_tolerance(kLinkTolerance, lhs, rhs);
  links.push_back(std::move(link));
}

void BoundChainReport::add_value(std::string name, double value) {
  values.emplace_back(std::move(name), value);
}

bool BoundChainReport::passed(double tolerance_scale) const {
  for (const auto& link : links) {
    if (!link_passes(link.lhs, link.rhs, tolerance_scale)) return false;
  }
  return true;
}

BoundChainReport theorem31_chain(const Generator& gen, const Distribution& p,
                                 const Distribution& q) {
  BoundChainReport report;
  report.chain_id = "T3.1/" + gen.name;
  report.range = ratio_range(p, q);
  try {
    const BoundSet bounds = bound_set(gen, report.range);
    const double c = c_f(gen, p, q);
    const double rho = rho_c_f(gen, p, q);
    const double gap = secant_gap(gen, p, q, report.range);
    const double spread = endpoint_gap(p, q, report.range);
    report.add_value("C_f", c);
    report.add_value("rho_C_f", rho);
    report.add_value("alpha", bounds.alpha);
    report.add_value("beta", bounds.beta);
    report.add_value("gamma", bounds.gamma);
    report.add_value("beta_minus_C_f", gap);
    report.add_value("endpoint_gap", spread);

    report.add_link("eq19.lower", 0.0, c);
    report.add_link("eq19.upper", c, rho);
    report.add_link("eq21", c, bounds.alpha);
    report.add_link("eq22", c, bounds.beta);
    report.add_link("eq23.first", 0.0, gap);
    report.add_link("eq23.middle", gap, bounds.gamma * spread);
    report.add_link("eq23.last", bounds.gamma * spread, bounds.alpha);
  } catch (const Error& e) {
    report.applicable = false;
    report.note = e.what();
    report.links.clear();
  }
  return report;
}

BoundSet delta_bound_set(const RatioRange& range) {
  const double r = range.lower;
  const double R = range.upper;
  if (range.degenerate()) return BoundSet{0.0, 0.0, 1.0, range};
  const double bracket = (R - 1.0) * (R + 3.0) / ((R + 1.0) * (R + 1.0)) +
                         (1.0 - r) * (r + 3.0) / ((r + 1.0) * (r + 1.0));
  return BoundSet{0.25 * (R - r) * bracket,
                  2.0 * (R - 1.0) * (1.0 - r) / ((R + 1.0) * (1.0 + r)),
                  bracket / (R - r), range};
}

BoundSet psi_bound_set(const RatioRange& range) {
  const double r = range.lower;
  const double R = range.upper;
  if (range.degenerate()) return BoundSet{0.0, 0.0, 4.0, range};
  const double gamma = 2.0 + (R + r) / ((r * R) * (r * R));
  const double beta = (R - 1.0) * (1.0 - r) * (1.0 + r * R) / (r * R);
  return BoundSet{0.25 * (R - r) * (R - r) * gamma, beta, gamma, range};
}

double psi_beta_printed_form(const RatioRange& range) {
  return (range.upper - 1.0) * (1.0 - range.lower) * (range.upper + range.lower);
}

double psi_gamma_power_mean_form(const RatioRange& range) {
  return 2.0 / power_mean(2.0, range.lower, range.upper) -
         1.0 / power_mean(1.0, range.lower, range.upper);
}

namespace {

BoundChainReport closed_form_chain(std::string id, MeasureKind measure, MeasureKind rho_measure,
                                   const Generator& gen, const BoundSet& bounds,
                                   const Distribution& p, const Distribution& q,
                                   const char* first, const char* alpha_eq,
                                   const char* beta_eq, const char* chain_eq) {
  BoundChainReport report;
  report.chain_id = std::move(id);
  report.range = bounds.range;
  const double value = divergence(measure, p, q);
  const double rho = divergence(rho_measure, p, q);
  const double gap = secant_gap(gen, p, q, bounds.range);
  const double spread = endpoint_gap(p, q, bounds.range);
  report.add_value(std::string(to_string(measure)), value);
  report.add_value(std::string(to_string(rho_measure)), rho);
  report.add_value("alpha", bounds.alpha);
  report.add_value("beta", bounds.beta);
  report.add_value("gamma", bounds.gamma);
  report.add_value("endpoint_gap", spread);

  const std::string chain(chain_eq);
  report.add_link(std::string(first) + ".lower", 0.0, value);
  report.add_link(std::string(first) + ".upper", value, rho);
  report.add_link(alpha_eq, value, bounds.alpha);
  report.add_link(beta_eq, value, bounds.beta);
  report.add_link(chain + ".first", 0.0, gap);
  report.add_link(chain + ".middle", gap, bounds.gamma * spread);
  report.add_link(chain + ".last", bounds.gamma * spread, bounds.alpha);
  return report;
}

}  // namespace

BoundChainReport delta_closed_form_chain(const Distribution& p, const Distribution& q) {
  const RatioRange range = ratio_range(p, q);
  return closed_form_chain("T4.1", MeasureKind::kTriangular, MeasureKind::kRhoDelta,
                           delta_gen(), delta_bound_set(range), p, q, "eq41", "eq43", "eq44",
                           "eq45");
}

BoundChainReport psi_closed_form_chain(const Distribution& p, const Distribution& q) {
  const RatioRange range = ratio_range(p, q);
  return closed_form_chain("T5.1", MeasureKind::kSymChi2, MeasureKind::kRhoPsi, psi_gen(),
                           psi_bound_set(range), p, q, "eq87", "eq89", "eq90", "eq91");
}

BoundChainReport theorem32_chain(Family family, double s, const Distribution& p,
                                 const Distribution& q) {
  if (family == Family::kPhiSBase) {
    throw Error(ErrorCode::kBadParameter, "theorem32_chain needs the delta or psi family");
  }
  const bool delta = family == Family::kDelta;
  BoundChainReport report;
  report.chain_id = std::string(delta ? "T4.2" : "T5.2") + "[s=" + format_s(s) + "]";
  report.s = s;
  report.range = ratio_range(p, q);

  const ExtremaPair ext = extrema_g(family, s, report.range);
  try {
    const Generator phi = phi_s_generator(s);
    const Generator& gen = delta ? delta_gen() : psi_gen();
    const double phi_value = phi_s(s, p, q);
    const double c = divergence(delta ? MeasureKind::kTriangular : MeasureKind::kSymChi2, p, q);
    const double c_star =
        divergence(delta ? MeasureKind::kDeltaStar : MeasureKind::kPsiStar, p, q);
    const double phi_rho_gap = tangent_gap(phi, p, q);
    const double phi_beta_gap = secant_gap(phi, p, q, report.range);
    const double c_beta_gap = secant_gap(gen, p, q, report.range);

    report.add_value("m", ext.m);
    if (!ext.sup_unbounded) report.add_value("M", ext.M);
    report.add_value("phi_s", phi_value);
    report.add_value("C_f", c);
    report.add_value("C_f_star", c_star);
    report.add_value("rho_phi_minus_phi", phi_rho_gap);
    report.add_value("beta_phi_minus_phi", phi_beta_gap);
    report.add_value("beta_f_minus_C_f", c_beta_gap);

    report.add_link("eq38.lower", ext.m * phi_value, c);
    if (!ext.sup_unbounded) report.add_link("eq38.upper", c, ext.M * phi_value);
    report.add_link("eq39.lower", ext.m * phi_rho_gap, c_star);
    if (!ext.sup_unbounded) report.add_link("eq39.upper", c_star, ext.M * phi_rho_gap);
    report.add_link("eq40.lower", ext.m * phi_beta_gap, c_beta_gap);
    if (!ext.sup_unbounded) report.add_link("eq40.upper", c_beta_gap, ext.M * phi_beta_gap);
    if (ext.sup_unbounded) report.note = "upper links not applicable: supremum is unbounded";
  } catch (const Error& e) {
    report.applicable = false;
    report.note = e.what();
    report.links.clear();
  }
  return report;
}

std::string_view to_string(PropositionId id) {
  switch (id) {
    case PropositionId::kP41: return "P4.1";
    case PropositionId::kP42: return "P4.2";
    case PropositionId::kP43: return "P4.3";
    case PropositionId::kP44: return "P4.4";
    case PropositionId::kP45: return "P4.5";
    case PropositionId::kP51: return "P5.1";
    case PropositionId::kP52: return "P5.2";
    case PropositionId::kP53: return "P5.3";
    case PropositionId::kP54: return "P5.4";
    case PropositionId::kP55: return "P5.5";
    case PropositionId::kHmRemark: return "HM";
  }
  return "unknown";
}

std::optional<PropositionId> parse_proposition(std::string_view name) {
  for (PropositionId id : kAllPropositions) {
    if (to_string(id) == name) return id;
  }
  if (name == "HM-remark") return PropositionId::kHmRemark;
  return std::nullopt;
}

BoundChainReport proposition_chain(PropositionId id, const Distribution& p,
                                   const Distribution& q) {
  require_same_length(p, q);
  BoundChainReport rep;
  rep.chain_id = std::string(to_string(id));
  rep.range = ratio_range(p, q);
  const double r = rep.range.lower;
  const double R = rep.range.upper;
  const double k_delta = 32.0 / 27.0;
  const double k_psi = 3.0 * std::cbrt(2.0);

  const auto D = [&] { return divergence(MeasureKind::kTriangular, p, q); };
  const auto Ds = [&] { return divergence(MeasureKind::kDeltaStar, p, q); };
  const auto Y = [&] { return divergence(MeasureKind::kSymChi2, p, q); };
  const auto Ys = [&] { return divergence(MeasureKind::kPsiStar, p, q); };
  const auto H = [&] { return divergence(MeasureKind::kHellinger, p, q); };
  const auto chi2_pq = [&] { return divergence(MeasureKind::kChi2, p, q); };
  const auto chi2_qp = [&] { return divergence(MeasureKind::kChi2, q, p); };
  const auto kl_pq = [&] { return divergence(MeasureKind::kKl, p, q); };
  const auto kl_qp = [&] { return divergence(MeasureKind::kKl, q, p); };
  // 3 Phi_3(Q||P) - chi2(Q||P) = [rho_{Phi_-1} - Phi_-1](P||Q).
  const auto phi3_bracket = [&] { return 3.0 * phi_s(3.0, q, p) - chi2_qp(); };
  // (R-1)(1-r)/(rR) - chi2(Q||P) = 2 [beta_{Phi_-1} - Phi_-1].
  const auto inverse_bracket = [&] {
    return 2.0 * secant_gap(phi_minus_one_gen(), p, q, rep.range);
  };

  switch (id) {
    case PropositionId::kP41: {
      const double lo = 4.0 * cube(r) / cube(r + 1.0);
      const double hi = 4.0 * cube(R) / cube(R + 1.0);
      const double x = chi2_qp(), d = D(), ds = Ds(), t = phi3_bracket();
      const double b = inverse_bracket(), g = secant_gap(delta_gen(), p, q, rep.range);
      rep.add_value("chi2(Q||P)", x);
      rep.add_value("delta", d);
      rep.add_value("delta_star", ds);
      rep.add_link("eq60.lower", lo * x, d);
      rep.add_link("eq60.upper", d, hi * x);
      rep.add_link("eq61.lower", 2.0 * lo * t, ds);
      rep.add_link("eq61.upper", ds, 2.0 * hi * t);
      rep.add_link("eq62.lower", lo * b, g);
      rep.add_link("eq62.upper", g, hi * b);
      break;
    }
    case PropositionId::kP42: {
      const double lo = 4.0 / cube(R + 1.0);
      const double hi = 4.0 / cube(r + 1.0);
      const double x = chi2_pq(), d = D(), ds = Ds();
      const double e = endpoint_gap(p, q, rep.range);
      const double g = secant_gap(delta_gen(), p, q, rep.range);
      rep.add_value("chi2(P||Q)", x);
      rep.add_value("delta", d);
      rep.add_value("delta_star", ds);
      rep.add_link("eq63.lower", lo * x, d);
      rep.add_link("eq63.upper", d, hi * x);
      rep.add_link("eq64.lower", lo * x, ds);
      rep.add_link("eq64.upper", ds, hi * x);
      rep.add_link("eq65.lower", lo * e, g);
      rep.add_link("eq65.upper", g, hi * e);
      break;
    }
    case PropositionId::kP43: {
      const double k = kl_qp(), d = D(), ds = Ds(), x = chi2_qp();
      const double beta_phi = phi_s_bound_set(0.0, rep.range).beta;
      const double beta_delta = delta_bound_set(rep.range).beta;
      rep.add_value("K(Q||P)", k);
      rep.add_value("delta", d);
      rep.add_value("delta_star", ds);
      rep.add_link("eq66.lower", 0.0, d);
      rep.add_link("eq66.upper", d, k_delta * k);
      rep.add_link("eq67.lower", 0.0, ds);
      rep.add_link("eq67.upper", ds, k_delta * (x - k));
      rep.add_link("eq68.lower", 0.0, k_delta * k - d);
      rep.add_link("eq68.upper", k_delta * k - d, k_delta * beta_phi - beta_delta);
      break;
    }
    case PropositionId::kP44: {
      const double h = H(), d = D(), ds = Ds(), rho = rho_half(p, q);
      const double beta_delta = delta_bound_set(rep.range).beta;
      rep.add_value("hellinger", h);
      rep.add_value("delta", d);
      rep.add_value("delta_star", ds);
      rep.add_link("eq72.lower", 0.0, d);
      rep.add_link("eq72.upper", d, 4.0 * h);
      rep.add_link("eq73.lower", 0.0, ds);
      rep.add_link("eq73.upper", ds, rho - 4.0 * h);
      rep.add_link("eq74.lower", 0.0, 4.0 * h - d);
      rep.add_link("eq74.upper", 4.0 * h - d, beta_phi_half(rep.range) - beta_delta);
      break;
    }
    case PropositionId::kP45: {
      const double k = kl_pq(), k_rev = kl_qp(), d = D(), ds = Ds();
      const double beta_phi = phi_s_bound_set(1.0, rep.range).beta;
      const double beta_delta = delta_bound_set(rep.range).beta;
      rep.add_value("K(P||Q)", k);
      rep.add_value("K(Q||P)", k_rev);
      rep.add_value("delta", d);
      rep.add_value("delta_star", ds);
      rep.add_link("eq78.lower", 0.0, d);
      rep.add_link("eq78.upper", d, k_delta * k);
      rep.add_link("eq79.lower", 0.0, ds);
      rep.add_link("eq79.upper", ds, k_delta * k_rev);
      rep.add_link("eq80.lower", 0.0, k_delta * k - d);
      rep.add_link("eq80.upper", k_delta * k - d, k_delta * beta_phi - beta_delta);
      break;
    }
    case PropositionId::kP51: {
      const double lo = cube(r) + 1.0;
      const double hi = cube(R) + 1.0;
      const double x = chi2_qp(), y = Y(), ys = Ys(), t = phi3_bracket();
      const double b = inverse_bracket(), g = secant_gap(psi_gen(), p, q, rep.range);
      rep.add_value("chi2(Q||P)", x);
      rep.add_value("psi", y);
      rep.add_value("psi_star", ys);
      rep.add_link("eq106.lower", lo * x, y);
      rep.add_link("eq106.upper", y, hi * x);
      rep.add_link("eq107.lower", 2.0 * lo * t, ys);
      rep.add_link("eq107.upper", ys, 2.0 * hi * t);
      rep.add_link("eq108.lower", lo * b, g);
      rep.add_link("eq108.upper", g, hi * b);
      break;
    }
    case PropositionId::kP52: {
      const double lo = (cube(R) + 1.0) / cube(R);
      const double hi = (cube(r) + 1.0) / cube(r);
      const double x = chi2_pq(), y = Y(), ys = Ys();
      const double e = endpoint_gap(p, q, rep.range);
      const double g = secant_gap(psi_gen(), p, q, rep.range);
      rep.add_value("chi2(P||Q)", x);
      rep.add_value("psi", y);
      rep.add_value("psi_star", ys);
      rep.add_link("eq109.lower", lo * x, y);
      rep.add_link("eq109.upper", y, hi * x);
      rep.add_link("eq110.lower", lo * x, ys);
      rep.add_link("eq110.upper", ys, hi * x);
      rep.add_link("eq111.lower", lo * e, g);
      rep.add_link("eq111.upper", g, hi * e);
      break;
    }
    case PropositionId::kP53: {
      const double k = kl_qp(), y = Y(), ys = Ys(), x = chi2_qp();
      const double beta_phi = phi_s_bound_set(0.0, rep.range).beta;
      const double beta_psi = psi_bound_set(rep.range).beta;
      rep.add_value("K(Q||P)", k);
      rep.add_value("psi", y);
      rep.add_value("psi_star", ys);
      rep.add_link("eq112.lower", 0.0, k_psi * k);
      rep.add_link("eq112.upper", k_psi * k, y);
      rep.add_link("eq113.lower", 0.0, k_psi * (x - k));
      rep.add_link("eq113.upper", k_psi * (x - k), ys);
      rep.add_link("eq114.lower", 0.0, y - k_psi * k);
      rep.add_link("eq114.upper", y - k_psi * k, beta_psi - k_psi * beta_phi);
      break;
    }
    case PropositionId::kP54: {
      const double h = H(), y = Y(), ys = Ys(), rho = rho_half(p, q);
      const double h_rev = divergence(MeasureKind::kHellinger, q, p);
      const double beta_psi = psi_bound_set(rep.range).beta;
      rep.add_value("hellinger", h);
      rep.add_value("psi", y);
      rep.add_value("psi_star", ys);
      rep.add_link("eq118.lower", 0.0, 16.0 * h);
      rep.add_link("eq118.upper", 16.0 * h, y);
      // rho here is 2 sum (q - p) sqrt(q / p); the bracket uses half that sum.
      const double bracket = 16.0 * (0.25 * rho - h_rev);
      rep.add_link("eq119.lower", 0.0, bracket);
      rep.add_link("eq119.upper", bracket, ys);
      rep.add_link("eq120.lower", 0.0, y - 16.0 * h);
      rep.add_link("eq120.upper", y - 16.0 * h, beta_psi - 4.0 * beta_phi_half(rep.range));
      break;
    }
    case PropositionId::kP55: {
      const double k = kl_pq(), k_rev = kl_qp(), y = Y(), ys = Ys();
      const double beta_phi = phi_s_bound_set(1.0, rep.range).beta;
      const double beta_psi = psi_bound_set(rep.range).beta;
      rep.add_value("K(P||Q)", k);
      rep.add_value("K(Q||P)", k_rev);
      rep.add_value("psi", y);
      rep.add_value("psi_star", ys);
      rep.add_link("eq124.lower", 0.0, k_psi * k);
      rep.add_link("eq124.upper", k_psi * k, y);
      rep.add_link("eq125.lower", 0.0, k_psi * k_rev);
      rep.add_link("eq125.upper", k_psi * k_rev, ys);
      rep.add_link("eq126.lower", 0.0, y - k_psi * k);
      rep.add_link("eq126.upper", y - k_psi * k, beta_psi - k_psi * beta_phi);
      break;
    }
    case PropositionId::kHmRemark: {
      const double u = 1.0 - divergence(MeasureKind::kHarmonicMean, p, q);
      const double x_qp = chi2_qp(), x_pq = chi2_pq(), h = H(), k = kl_pq(), k_rev = kl_qp();
      rep.add_value("1-W", u);
      rep.add_value("chi2(Q||P)", x_qp);
      rep.add_value("chi2(P||Q)", x_pq);
      rep.add_link("eq84.lower", 2.0 * cube(r) / cube(r + 1.0) * x_qp, u);
      rep.add_link("eq84.upper", u, 2.0 * cube(R) / cube(R + 1.0) * x_qp);
      rep.add_link("eq85.lower", 2.0 / cube(R + 1.0) * x_pq, u);
      rep.add_link("eq85.upper", u, 2.0 / cube(r + 1.0) * x_pq);
      rep.add_link("eq86.lower", 0.0, u);
      rep.add_link("eq86.upper", u, 16.0 / 27.0 * k_rev);
      rep.add_link("eq130.lower", 0.0, u);
      rep.add_link("eq130.upper", u, 2.0 * h);
      rep.add_link("eq131.lower", 0.0, u);
      rep.add_link("eq131.upper", u, 16.0 / 27.0 * k);
      break;
    }
  }
  return rep;
}

}  // namespace divbound
