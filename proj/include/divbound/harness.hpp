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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "divbound/bounds.hpp"
#include "divbound/simplex.hpp"

namespace divbound {

/// One registered inequality chain. Chains with `per_s` set are evaluated once
/// for every requested s value; the others ignore s.
struct ChainEntry {
  std::string id;
  bool per_s = false;
  std::size_t link_count = 0;  // links emitted when the chain is applicable
  std::function<BoundChainReport(const Distribution&, const Distribution&, double)> run;
};

/// The static chain table shared by verify_all, fuzz and the CLI.
const std::vector<ChainEntry>& registered_chains();

/// Every registered chain on (P, Q), in table order with per-s chains
/// expanded in the order of `s_values`.
std::vector<BoundChainReport> verify_all(const Distribution& p, const Distribution& q,
                                         const std::vector<double>& s_values);

/// Number of links verify_all emits when every chain is applicable.
std::size_t registered_link_count(const std::vector<double>& s_values);

struct ErrataEntry {
  std::string equation;
  std::string description;
  double printed_coefficient = 0.0;
  double derived_coefficient = 0.0;
  double printed_bound = 0.0;
  double derived_bound = 0.0;
  bool agree = true;
};

/// Evaluates the printed and the theorem-derived variants of the suspect
/// equations. Variants agree when their bounds coincide and, unless the ratio
/// range has collapsed to {1}, their coefficients coincide too.
std::vector<ErrataEntry> errata_compare(const Distribution& p, const Distribution& q);

struct FuzzConfig {
  std::vector<std::size_t> dims{2, 4, 16};
  std::size_t trials_per_dim = 1000;
  std::uint64_t seed = 42;
  std::vector<double> concentrations{0.5, 1.0, 5.0};
  std::vector<double> s_values{-3.0, -2.0, -1.0, 0.0, 0.5, 1.0, 2.0, 3.0, 5.0};
  double tolerance_scale = 1.0;
  unsigned threads = 1;

  /// Throws Error(kBadParameter) on empty lists, zero counts or dims < 2.
  void validate() const;
};

struct Witness {
  std::size_t dim = 0;
  double concentration = 0.0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::vector<double> p;
  std::vector<double> q;
};

struct Violation {
  std::string chain_id;
  std::string link;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  Witness witness;
};

struct MinSlack {
  double slack = 0.0;
  std::string link;
  Witness witness;
};

struct ErrataDiff {
  std::string equation;
  double printed = 0.0;
  double derived = 0.0;
  std::size_t disagreements = 0;
  Witness witness;  // first disagreeing trial
};

struct FuzzSummary {
  std::size_t trials = 0;
  std::size_t total_links_checked = 0;
  std::size_t not_applicable = 0;
  std::vector<Violation> violations;
  std::map<std::string, MinSlack> min_slack_per_chain;
  std::map<std::string, MinSlack> min_slack_per_link;  // key: chain/link
  std::vector<ErrataDiff> errata_diffs;
  double max_identity_residual = 0.0;  // max |delta - 2(1 - W)|
};

/// Per-trial seed: seed xor hash(dim, concentration, trial).
std::uint64_t trial_seed(std::uint64_t seed, std::size_t dim, double concentration,
                         std::size_t trial);

/// The (P, Q) pair drawn for one trial.
std::pair<Distribution, Distribution> trial_pair(std::uint64_t seed, std::size_t dim,
                                                 double concentration, std::size_t trial);

/// Deterministic for a fixed config regardless of `threads`.
FuzzSummary fuzz(const FuzzConfig& config);

/// Parses DIVBOUND_THREADS; falls back to hardware concurrency.
unsigned threads_from_env();

}  // namespace divbound
