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

#include "divbound/harness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <string_view>
#include <thread>
#include <tuple>
#include <utility>
#include <iterator>

#include "divbound/csiszar.hpp"
#include "divbound/error.hpp"
#include "divbound/measures.hpp"
#include "divbound/numeric.hpp"

namespace divbound {
namespace {

using Runner = std::function<BoundChainReport(const Distribution&, const Distribution&, double)>;

ChainEntry fixed(std::string id, std::size_t links, Runner run) {
  return ChainEntry{std::move(id), false, links, std::move(run)};
}

ChainEntry per_s(std::string id, std::size_t links, Runner run) {
  return ChainEntry{std::move(id), true, links, std::move(run)};
}

ChainEntry proposition(PropositionId id, std::size_t links) {
  return fixed(std::string(to_string(id)), links,
               [id](const Distribution& p, const Distribution& q, double) {
                 return proposition_chain(id, p, q);
               });
}

std::vector<ChainEntry> build_registry() {
  std::vector<ChainEntry> table;
  table.push_back(fixed("T3.1/f_delta", 7, [](const Distribution& p, const Distribution& q,
                                             double) {
    static const Generator gen = triangular_generator();
    return theorem31_chain(gen, p, q);
  }));
  table.push_back(fixed("T3.1/f_psi", 7, [](const Distribution& p, const Distribution& q,
                                           double) {
    static const Generator gen = sym_chi2_generator();
    return theorem31_chain(gen, p, q);
  }));
  table.push_back(per_s("T3.1/f_phi", 7, [](const Distribution& p, const Distribution& q,
                                           double s) {
    return theorem31_chain(phi_s_generator(s), p, q);
  }));
  table.push_back(fixed("T4.1", 7, [](const Distribution& p, const Distribution& q, double) {
    return delta_closed_form_chain(p, q);
  }));
  table.push_back(per_s("T4.2", 6, [](const Distribution& p, const Distribution& q, double s) {
    return theorem32_chain(Family::kDelta, s, p, q);
  }));
  for (PropositionId id : {PropositionId::kP41, PropositionId::kP42, PropositionId::kP43,
                           PropositionId::kP44, PropositionId::kP45}) {
    table.push_back(proposition(id, 6));
  }
  table.push_back(proposition(PropositionId::kHmRemark, 10));
  table.push_back(fixed("T5.1", 7, [](const Distribution& p, const Distribution& q, double) {
    return psi_closed_form_chain(p, q);
  }));
  table.push_back(per_s("T5.2", 6, [](const Distribution& p, const Distribution& q, double s) {
    return theorem32_chain(Family::kPsi, s, p, q);
  }));
  for (PropositionId id : {PropositionId::kP51, PropositionId::kP52, PropositionId::kP53,
                           PropositionId::kP54, PropositionId::kP55}) {
    table.push_back(proposition(id, 6));
  }
  return table;
}

bool close(double a, double b) {
  return std::fabs(a - b) <= scaled_tolerance(kLinkTolerance, a, b);
}

}  // namespace

const std::vector<ChainEntry>& registered_chains() {
  static const std::vector<ChainEntry> table = build_registry();
  return table;
}

std::vector<BoundChainReport> verify_all(const Distribution& p, const Distribution& q,
                                         const std::vector<double>& s_values) {
  require_same_length(p, q);
  std::vector<BoundChainReport> reports;
  for (const ChainEntry& entry : registered_chains()) {
    if (!entry.per_s) {
      reports.push_back(entry.run(p, q, 0.0));
      continue;
    }
    for (double s : s_values) {
      if (!std::isfinite(s)) {
        BoundChainReport na;
        na.chain_id = entry.id + "[s=nan]";
        na.applicable = false;
        na.note = "s must be finite";
        reports.push_back(std::move(na));
        continue;
      }
      reports.push_back(entry.run(p, q, s));
    }
  }
  return reports;
}

std::size_t registered_link_count(const std::vector<double>& s_values) {
  std::size_t total = 0;
  for (const ChainEntry& entry : registered_chains()) {
    total += entry.per_s ? entry.link_count * s_values.size() : entry.link_count;
  }
  return total;
}

std::vector<ErrataEntry> errata_compare(const Distribution& p, const Distribution& q) {
  require_same_length(p, q);
  const RatioRange range = ratio_range(p, q);
  const double r = range.lower;
  const double R = range.upper;
  const double s = 2.0;
  const Generator phi2 = phi_s_generator(s);

  std::vector<ErrataEntry> out;
  const auto push = [&](std::string eq, std::string what, double coef_printed,
                        double coef_derived, double bracket_printed, double bracket_derived) {
    ErrataEntry e;
    e.equation = std::move(eq);
    e.description = std::move(what);
    e.printed_coefficient = coef_printed;
    e.derived_coefficient = coef_derived;
    e.printed_bound = coef_printed * bracket_printed;
    e.derived_bound = coef_derived * bracket_derived;
    e.agree = close(e.printed_bound, e.derived_bound) &&
              (range.degenerate() || close(coef_printed, coef_derived));
    out.push_back(std::move(e));
  };

  const ExtremaPair delta = extrema_g(Family::kDelta, s, range);
  const double beta_gap = secant_gap(phi2, p, q, range);
  push("eq54.lower", "s=2 lower coefficient R^(1-s)/(R+1)^2 vs 8R^(2-s)/(R+1)^3",
       std::pow(R, 1.0 - s) / ((R + 1.0) * (R + 1.0)), delta.m, beta_gap, beta_gap);
  push("eq54.upper", "s=2 upper coefficient r^(1-s)/(r+1)^2 vs 8r^(2-s)/(r+1)^3",
       std::pow(r, 1.0 - s) / ((r + 1.0) * (r + 1.0)), delta.M, beta_gap, beta_gap);

  const ExtremaPair psi = extrema_g(Family::kPsi, s, range);
  const double rho_gap = tangent_gap(phi2, p, q);
  push("eq99.lower", "s=2 lower coefficient 2(r^3+1)/r^(1+s) vs 2(R^3+1)/R^(1+s)",
       2.0 * (r * r * r + 1.0) / std::pow(r, 1.0 + s), psi.m, rho_gap, rho_gap);

  const double chi2_qp = divergence(MeasureKind::kChi2, q, p);
  const double coef107 = 2.0 * (R * R * R + 1.0);
  push("eq107.upper", "operand order of Phi_3: Phi_3(P||Q) vs Phi_3(Q||P)", coef107, coef107,
       3.0 * phi_s(3.0, p, q) - chi2_qp, 3.0 * phi_s(3.0, q, p) - chi2_qp);

  const BoundSet psi_set = psi_bound_set(range);
  push("eq93", "beta_psi as (R-1)(1-r)(R+r) vs secant value (R-1)(1-r)(1+rR)/(rR)",
       psi_beta_printed_form(range), psi_set.beta, 1.0, 1.0);

  const double spread = endpoint_gap(p, q, range);
  push("eq94", "gamma_psi as 2/L_2 - 1/L_1 vs divided difference of f'_psi",
       range.degenerate() ? 1.0 : psi_gamma_power_mean_form(range),
       psi_set.gamma, spread, spread);
  return out;
}

void FuzzConfig::validate() const {
  if (dims.empty() || concentrations.empty() || s_values.empty()) {
    throw Error(ErrorCode::kBadParameter, "fuzz config lists must be non-empty");
  }
  if (trials_per_dim == 0) throw Error(ErrorCode::kBadParameter, "trials must be >= 1");
  for (std::size_t d : dims) {
    if (d < 2) throw Error(ErrorCode::kBadParameter, "every dimension must be >= 2");
  }
  for (double c : concentrations) {
    if (!(c > 0.0) || !std::isfinite(c)) {
      throw Error(ErrorCode::kBadParameter, "concentrations must be positive");
    }
  }
  for (double s : s_values) {
    if (!std::isfinite(s)) throw Error(ErrorCode::kBadParameter, "s values must be finite");
  }
  if (!(tolerance_scale > 0.0)) {
    throw Error(ErrorCode::kBadParameter, "tolerance scale must be positive");
  }
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t dim, double concentration,
                         std::size_t trial) {
  std::uint64_t h = mix64(static_cast<std::uint64_t>(dim));
  h = mix64(h ^ std::bit_cast<std::uint64_t>(concentration));
  h = mix64(h ^ static_cast<std::uint64_t>(trial));
  return seed ^ h;
}

std::pair<Distribution, Distribution> trial_pair(std::uint64_t seed, std::size_t dim,
                                                 double concentration, std::size_t trial) {
  const std::uint64_t base = trial_seed(seed, dim, concentration, trial);
  return {sample(dim, base, concentration), sample(dim, mix64(base), concentration)};
}

namespace {

struct TrialKey {
  std::size_t dim;
  double concentration;
  std::size_t trial;
};

Witness make_witness(const TrialKey& key, std::uint64_t seed, const Distribution& p,
                     const Distribution& q) {
  return Witness{key.dim,
                 key.concentration,
                 key.trial,
                 trial_seed(seed, key.dim, key.concentration, key.trial),
                 std::vector<double>(p.probs().begin(), p.probs().end()),
                 std::vector<double>(q.probs().begin(), q.probs().end())};
}

void keep_min(std::map<std::string, MinSlack>& table, const std::string& key, double slack,
              const std::string& link, const std::function<Witness()>& witness) {
  auto it = table.find(key);
  if (it == table.end()) {
    table.emplace(key, MinSlack{slack, link, witness()});
  } else if (slack < it->second.slack) {
    it->second = MinSlack{slack, link, witness()};
  }
}

void run_trial(const FuzzConfig& config, const TrialKey& key, FuzzSummary& acc,
               std::map<std::string, std::size_t>& errata_index) {
  const auto [p, q] = trial_pair(config.seed, key.dim, key.concentration, key.trial);
  const auto witness = [&] { return make_witness(key, config.seed, p, q); };
  ++acc.trials;

  for (const BoundChainReport& report : verify_all(p, q, config.s_values)) {
    if (!report.applicable) {
      ++acc.not_applicable;
      continue;
    }
    for (const ChainLink& link : report.links) {
      ++acc.total_links_checked;
      if (!link_passes(link.lhs, link.rhs, config.tolerance_scale)) {
        acc.violations.push_back(
            Violation{report.chain_id, link.label, link.lhs, link.rhs, link.slack, witness()});
      }
      keep_min(acc.min_slack_per_chain, report.chain_id, link.slack, link.label, witness);
      keep_min(acc.min_slack_per_link, report.chain_id + "/" + link.label, link.slack,
               link.label, witness);
    }
  }

  const double residual = std::fabs(divergence(MeasureKind::kTriangular, p, q) -
                                    2.0 * (1.0 - divergence(MeasureKind::kHarmonicMean, p, q)));
  acc.max_identity_residual = std::max(acc.max_identity_residual, residual);

  for (const ErrataEntry& e : errata_compare(p, q)) {
    if (e.agree) continue;
    auto it = errata_index.find(e.equation);
    if (it == errata_index.end()) {
      errata_index.emplace(e.equation, acc.errata_diffs.size());
      acc.errata_diffs.push_back(
          ErrataDiff{e.equation, e.printed_coefficient, e.derived_coefficient, 1, witness()});
    } else {
      ++acc.errata_diffs[it->second].disagreements;
    }
  }
}

// Folds `part` (covering later trials) into `acc`. Ties keep the earlier
// witness, so the result does not depend on how trials were partitioned.
void merge_into(FuzzSummary& acc, FuzzSummary&& part) {
  acc.trials += part.trials;
  acc.total_links_checked += part.total_links_checked;
  acc.not_applicable += part.not_applicable;
  acc.max_identity_residual = std::max(acc.max_identity_residual, part.max_identity_residual);
  std::move(part.violations.begin(), part.violations.end(), std::back_inserter(acc.violations));
  using Table = std::map<std::string, MinSlack>;
  for (Table FuzzSummary::*table :
       {&FuzzSummary::min_slack_per_chain, &FuzzSummary::min_slack_per_link}) {
    for (auto& [key, value] : part.*table) {
      auto it = (acc.*table).find(key);
      if (it == (acc.*table).end()) {
        (acc.*table).emplace(key, std::move(value));
      } else if (value.slack < it->second.slack) {
        it->second = std::move(value);
      }
    }
  }
  for (auto& diff : part.errata_diffs) {
    auto it = std::find_if(acc.errata_diffs.begin(), acc.errata_diffs.end(),
                           [&](const ErrataDiff& d) { return d.equation == diff.equation; });
    if (it == acc.errata_diffs.end()) {
      acc.errata_diffs.push_back(std::move(diff));
    } else {
      it->disagreements += diff.disagreements;
    }
  }
}

}  // namespace

FuzzSummary fuzz(const FuzzConfig& config) {
  config.validate();
  std::vector<TrialKey> keys;
  for (std::size_t dim : config.dims) {
    for (double c : config.concentrations) {
      for (std::size_t t = 0; t < config.trials_per_dim; ++t) keys.push_back({dim, c, t});
    }
  }

  const std::size_t workers =
      std::clamp<std::size_t>(config.threads == 0 ? 1 : config.threads, 1, keys.size());
  std::vector<FuzzSummary> parts(workers);
  const auto run_chunk = [&](std::size_t w) {
    const std::size_t begin = keys.size() * w / workers;
    const std::size_t end = keys.size() * (w + 1) / workers;
    std::map<std::string, std::size_t> errata_index;
    for (std::size_t i = begin; i < end; ++i) run_trial(config, keys[i], parts[w], errata_index);
  };
  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run_chunk, w);
  }

  FuzzSummary summary = std::move(parts.front());
  for (std::size_t w = 1; w < workers; ++w) merge_into(summary, std::move(parts[w]));

  std::stable_sort(summary.errata_diffs.begin(), summary.errata_diffs.end(),
                   [](const ErrataDiff& a, const ErrataDiff& b) { return a.equation < b.equation; });
  std::stable_sort(summary.violations.begin(), summary.violations.end(),
                   [](const Violation& a, const Violation& b) {
                     return std::tie(a.chain_id, a.link, a.witness.dim, a.witness.concentration,
                                     a.witness.trial) <
                            std::tie(b.chain_id, b.link, b.witness.dim, b.witness.concentration,
                                     b.witness.trial);
                   });
  return summary;
}

unsigned threads_from_env() {
  if (const char* env = std::getenv("DIVBOUND_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace divbound
