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

#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "divbound/bounds.hpp"
#include "divbound/csiszar.hpp"
#include "divbound/error.hpp"
#include "divbound/measures.hpp"
#include "support.hpp"

namespace divbound {
namespace {

namespace oracle = testing::oracle;
using testing::dist;
using testing::LD;
using testing::rel_close;
using testing::rel_err;

const Distribution kP = dist({0.5, 0.5});
const Distribution kQ = dist({0.25, 0.75});
const double kCbrt2 = std::cbrt(2.0);

const ChainLink& link(const BoundChainReport& rep, const std::string& label) {
  for (const ChainLink& l : rep.links) {
    if (l.label == label) return l;
  }
  throw std::runtime_error("no link " + label + " in " + rep.chain_id);
}

void expect_all_pass(const BoundChainReport& rep, const std::string& context) {
  ASSERT_TRUE(rep.applicable) << rep.chain_id << " " << rep.note;
  for (const ChainLink& l : rep.links) {
    ASSERT_TRUE(l.pass) << context << " " << rep.chain_id << "/" << l.label << " lhs " << l.lhs
                        << " rhs " << l.rhs << " slack " << l.slack;
  }
}

TEST(GFunction, SpecExamplesAndConstants) {
  EXPECT_NEAR(g_function(Family::kDelta, 0.0, 2.0), 32.0 / 27.0, 1e-12);
  EXPECT_NEAR(g_function(Family::kDelta, 0.5, 1.0), 1.0, 1e-12);
  EXPECT_NEAR(g_function(Family::kDelta, 1.0, 0.5), 32.0 / 27.0, 1e-12);
  EXPECT_NEAR(g_function(Family::kPsi, 0.0, 1.0 / kCbrt2), 3.0 * kCbrt2, 1e-12);
  EXPECT_NEAR(g_function(Family::kPsi, 0.5, 1.0), 4.0, 1e-12);
  EXPECT_NEAR(g_function(Family::kPsi, 1.0, kCbrt2), 3.0 * kCbrt2, 1e-12);
  EXPECT_NEAR(3.0 * kCbrt2, 3.7797631496846193, 1e-12);
  for (double x : {0.1, 1.0, 7.0}) EXPECT_EQ(g_function(Family::kPhiSBase, 2.5, x), 1.0);
}

TEST(GFunction, MatchesOracle) {
  for (double s : {-3.0, -1.0, 0.0, 0.5, 1.0, 2.0, 5.0}) {
    for (double x : {0.01, 0.3, 1.0, 2.5, 40.0}) {
      EXPECT_TRUE(rel_close(g_function(Family::kDelta, s, x), double(oracle::g_delta(s, x)),
                            1e-13));
      EXPECT_TRUE(rel_close(g_function(Family::kPsi, s, x), double(oracle::g_psi(s, x)), 1e-13));
    }
  }
}

TEST(Extrema, SpecExamples) {
  const RatioRange range = RatioRange::make(2.0 / 3.0, 2.0);
  const ExtremaPair d2 = extrema_g(Family::kDelta, 2.0, range);
  EXPECT_NEAR(d2.m, 8.0 / 27.0, 1e-15);
  EXPECT_NEAR(d2.M, 1.728, 1e-12);
  EXPECT_DOUBLE_EQ(*d2.argmin, 2.0);
  EXPECT_DOUBLE_EQ(*d2.argmax, 2.0 / 3.0);

  const ExtremaPair d1 = extrema_g(Family::kDelta, 1.0, std::nullopt);
  EXPECT_NEAR(d1.M, 32.0 / 27.0, 1e-12);
  EXPECT_NEAR(*d1.argmax, 0.5, 1e-9);
  EXPECT_EQ(d1.m, 0.0);
  EXPECT_FALSE(d1.argmin.has_value());

  const ExtremaPair p0 = extrema_g(Family::kPsi, 0.0, std::nullopt);
  EXPECT_NEAR(p0.m, 3.0 * kCbrt2, 1e-12);
  EXPECT_NEAR(*p0.argmin, 1.0 / kCbrt2, 1e-9);
  EXPECT_TRUE(p0.sup_unbounded);
}

TEST(Extrema, UnboundedGlobalConstants) {
  EXPECT_NEAR(extrema_g(Family::kDelta, 0.0, std::nullopt).M, 32.0 / 27.0, 1e-12);
  EXPECT_NEAR(extrema_g(Family::kDelta, 0.5, std::nullopt).M, 1.0, 1e-12);
  EXPECT_NEAR(extrema_g(Family::kPsi, 0.5, std::nullopt).m, 4.0, 1e-12);
  EXPECT_NEAR(extrema_g(Family::kPsi, 1.0, std::nullopt).m, 3.0 * kCbrt2, 1e-12);
  EXPECT_NEAR(*extrema_g(Family::kPsi, 1.0, std::nullopt).argmin, kCbrt2, 1e-9);
}

TEST(Extrema, UnsupportedRegime) {
  for (double s : {-2.0, 0.25, 1.5, 3.0}) {
    for (Family f : {Family::kDelta, Family::kPsi}) {
      try {
        extrema_g(f, s, std::nullopt);
        ADD_FAILURE() << s;
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kUnsupportedRegime);
      }
    }
  }
}

TEST(Extrema, MatchesGridSearch) {
  const auto pairs = testing::random_pairs(40, 51, {2, 3}, {0.5, 1.0});
  for (double s : {-3.0, -1.0, -0.5, 0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 5.0}) {
    for (const auto& [p, q] : pairs) {
      const RatioRange range = ratio_range(p, q);
      if (range.degenerate()) continue;
      for (Family f : {Family::kDelta, Family::kPsi}) {
        const auto g = [&](LD x) {
          return f == Family::kDelta ? oracle::g_delta(s, x) : oracle::g_psi(s, x);
        };
        const auto [mn, mx] = oracle::refined_extrema(g, range.lower, range.upper, 10000);
        const ExtremaPair e = extrema_g(f, s, range);
        ASSERT_LE(rel_err(e.m, double(mn)), 1e-6) << "s=" << s << " m";
        ASSERT_LE(rel_err(e.M, double(mx)), 1e-6) << "s=" << s << " M";
        ASSERT_LE(e.m, e.M);
        // Exact extrema can only beat the grid.
        ASSERT_LE(e.m, double(mn) * (1 + 1e-12));
        ASSERT_GE(e.M, double(mx) * (1 - 1e-12));
      }
    }
  }
}

TEST(Extrema, DegenerateRange) {
  const ExtremaPair e = extrema_g(Family::kPsi, 3.0, RatioRange::make(1.0, 1.0));
  EXPECT_EQ(e.m, 4.0);
  EXPECT_EQ(e.M, 4.0);
}

TEST(Theorem32, DeltaSpecExamples) {
  const BoundChainReport s2 = theorem32_chain(Family::kDelta, 2.0, kP, kQ);
  expect_all_pass(s2, "s=2");
  EXPECT_NEAR(link(s2, "eq38.lower").lhs, 8.0 / 27.0 / 6.0, 1e-12);
  EXPECT_NEAR(link(s2, "eq38.lower").rhs, 2.0 / 15.0, 1e-15);
  EXPECT_NEAR(link(s2, "eq38.upper").rhs, 1.728 / 6.0, 1e-12);

  const BoundChainReport sm1 = theorem32_chain(Family::kDelta, -1.0, kP, kQ);
  expect_all_pass(sm1, "s=-1");
  const double r = 2.0 / 3.0;
  EXPECT_NEAR(link(sm1, "eq38.lower").lhs, 4.0 * r * r * r / std::pow(r + 1.0, 3) * 0.25, 1e-12);
  EXPECT_NEAR(link(sm1, "eq38.upper").rhs, 4.0 * 8.0 / 27.0 * 0.25, 1e-12);
  EXPECT_EQ(sm1.chain_id, "T4.2[s=-1]");
}

TEST(Theorem32, IdentityCaseIsAllZero) {
  const Distribution u = dist({0.25, 0.25, 0.25, 0.25});
  for (double s : {-3.0, -1.0, 0.5, 2.0}) {
    for (Family f : {Family::kDelta, Family::kPsi}) {
      const BoundChainReport rep = theorem32_chain(f, s, u, u);
      expect_all_pass(rep, "P=Q");
      for (const ChainLink& l : rep.links) {
        EXPECT_EQ(l.lhs, 0.0);
        EXPECT_EQ(l.rhs, 0.0);
        EXPECT_TRUE(l.equality);
      }
    }
  }
}

TEST(Theorem32, HoldsOnRandomPairs) {
  const auto pairs = testing::random_pairs(10000, 52);
  for (double s : {-3.0, -2.0, -1.0, 0.0, 0.5, 1.0, 2.0, 3.0, 5.0}) {
    for (Family f : {Family::kDelta, Family::kPsi}) {
      for (const auto& [p, q] : pairs) {
        const BoundChainReport rep = theorem32_chain(f, s, p, q);
        ASSERT_TRUE(rep.passed()) << rep.chain_id;
      }
    }
  }
}

TEST(Theorem32, RejectsBaseFamily) {
  EXPECT_THROW(theorem32_chain(Family::kPhiSBase, 1.0, kP, kQ), Error);
}

TEST(Theorem31, HoldsForAllGeneratorFamilies) {
  const auto pairs = testing::random_pairs(3000, 53);
  std::vector<Generator> gens{triangular_generator(), sym_chi2_generator()};
  for (double s : {-2.0, 0.0, 0.5, 1.0, 3.0}) gens.push_back(phi_s_generator(s));
  for (const Generator& g : gens) {
    for (const auto& [p, q] : pairs) {
      const BoundChainReport rep = theorem31_chain(g, p, q);
      ASSERT_TRUE(rep.passed()) << rep.chain_id;
    }
  }
}

TEST(ClosedForms, DeltaMatchesGeneric) {
  for (const auto& [p, q] : testing::random_pairs(2000, 54)) {
    const RatioRange range = ratio_range(p, q);
    const BoundSet closed = delta_bound_set(range);
    const BoundSet generic = bound_set(triangular_generator(), range);
    ASSERT_TRUE(rel_close(closed.alpha, generic.alpha, 1e-10));
    ASSERT_TRUE(rel_close(closed.beta, generic.beta, 1e-10));
    ASSERT_TRUE(rel_close(closed.gamma, generic.gamma, 1e-10));
  }
}

TEST(ClosedForms, PsiDerivedFormsMatchGeneric) {
  for (const auto& [p, q] : testing::random_pairs(2000, 55)) {
    const RatioRange range = ratio_range(p, q);
    const BoundSet closed = psi_bound_set(range);
    const BoundSet generic = bound_set(sym_chi2_generator(), range);
    ASSERT_TRUE(rel_close(closed.alpha, generic.alpha, 1e-10));
    ASSERT_TRUE(rel_close(closed.beta, generic.beta, 1e-10));
    ASSERT_TRUE(rel_close(closed.gamma, generic.gamma, 1e-10));
  }
}

// The printed beta_psi = (R-1)(1-r)(R+r) and gamma_psi = 2/L_2 - 1/L_1 are
// not the secant and divided difference of f_psi.
TEST(ClosedForms, PrintedPsiFormsDisagree) {
  const RatioRange range = RatioRange::make(2.0 / 3.0, 2.0);
  EXPECT_NEAR(psi_beta_printed_form(range), 8.0 / 9.0, 1e-15);
  EXPECT_NEAR(psi_bound_set(range).beta, 7.0 / 12.0, 1e-15);
  EXPECT_NEAR(psi_gamma_power_mean_form(range), 0.6911533837, 1e-9);
  EXPECT_NEAR(psi_bound_set(range).gamma, 3.5, 1e-15);
  // At r = R = 1 the printed gamma tends to 1, not f''(1) = 4.
  EXPECT_NEAR(psi_gamma_power_mean_form(RatioRange::make(1.0 - 1e-6, 1.0 + 1e-6)), 1.0, 1e-5);
}

TEST(ClosedForms, EndpointIdentityTwoPoints) {
  for (const BoundChainReport& rep : {delta_closed_form_chain(kP, kQ), psi_closed_form_chain(kP, kQ)}) {
    expect_all_pass(rep, "two-point");
    const std::string eq = rep.chain_id == "T4.1" ? "eq45" : "eq91";
    const ChainLink& mid = link(rep, eq + ".middle");
    EXPECT_EQ(mid.lhs, 0.0);
    EXPECT_EQ(mid.rhs, 0.0);
    EXPECT_TRUE(mid.equality);
  }
  EXPECT_NEAR(divergence(MeasureKind::kChi2, kP, kQ), 1.0 / 3.0, 1e-15);
}

TEST(ClosedForms, ChainsHoldOnRandomPairs) {
  for (const auto& [p, q] : testing::random_pairs(10000, 56)) {
    ASSERT_TRUE(delta_closed_form_chain(p, q).passed());
    ASSERT_TRUE(psi_closed_form_chain(p, q).passed());
  }
}

TEST(Propositions, SpecExamples) {
  const BoundChainReport p44 = proposition_chain(PropositionId::kP44, kP, kQ);
  expect_all_pass(p44, "P4.4");
  const ChainLink& l72 = link(p44, "eq72.upper");
  EXPECT_NEAR(l72.lhs, 2.0 / 15.0, 1e-15);
  EXPECT_NEAR(l72.rhs, 0.136296695, 1e-9);
  EXPECT_NEAR(l72.slack, 0.002963, 1e-6);

  const BoundChainReport p54 = proposition_chain(PropositionId::kP54, kP, kP);
  expect_all_pass(p54, "P5.4");
  for (const ChainLink& l : p54.links) EXPECT_EQ(l.slack, 0.0) << l.label;

  const BoundChainReport p43 = proposition_chain(PropositionId::kP43, kP, kQ);
  const ChainLink& l66 = link(p43, "eq66.upper");
  const double k_qp = 0.25 * std::log(0.5) + 0.75 * std::log(1.5);
  EXPECT_NEAR(l66.rhs, 32.0 / 27.0 * k_qp, 1e-15);
  EXPECT_NEAR(l66.rhs, 0.155036, 1e-6);
  EXPECT_TRUE(l66.pass);
}

TEST(Propositions, FixedConstants) {
  // Upper link of P5.4 reads 16 h <= psi.
  const BoundChainReport p54 = proposition_chain(PropositionId::kP54, kP, kQ);
  EXPECT_NEAR(link(p54, "eq118.upper").lhs, 16.0 * divergence(MeasureKind::kHellinger, kP, kQ),
              1e-14);
  const BoundChainReport p53 = proposition_chain(PropositionId::kP53, kP, kQ);
  EXPECT_NEAR(link(p53, "eq112.upper").lhs,
              3.0 * kCbrt2 * divergence(MeasureKind::kKl, kQ, kP), 1e-14);
  const BoundChainReport p45 = proposition_chain(PropositionId::kP45, kP, kQ);
  EXPECT_NEAR(link(p45, "eq78.upper").rhs, 32.0 / 27.0 * divergence(MeasureKind::kKl, kP, kQ),
              1e-14);
}

TEST(Propositions, HoldOnRandomPairs) {
  for (const auto& [p, q] : testing::random_pairs(10000, 57)) {
    for (PropositionId id : kAllPropositions) {
      const BoundChainReport rep = proposition_chain(id, p, q);
      ASSERT_TRUE(rep.passed()) << rep.chain_id;
    }
  }
}

TEST(Propositions, Names) {
  for (PropositionId id : kAllPropositions) EXPECT_EQ(parse_proposition(to_string(id)), id);
  EXPECT_EQ(parse_proposition("HM-remark"), PropositionId::kHmRemark);
  EXPECT_FALSE(parse_proposition("P9.9").has_value());
}

TEST(Links, ScaleAwareTolerance) {
  EXPECT_TRUE(link_passes(0.0, 0.0));
  EXPECT_TRUE(link_passes(1.0 + 5e-10, 1.0));
  EXPECT_FALSE(link_passes(1.0 + 2e-9, 1.0));
  EXPECT_TRUE(link_passes(1e6 + 5e-4, 1e6));
  EXPECT_FALSE(link_passes(1e6 + 5e-3, 1e6));
  EXPECT_TRUE(link_passes(1.0 + 2e-9, 1.0, 10.0));
  BoundChainReport rep;
  rep.add_link("x", 2.0, 1.0);
  EXPECT_EQ(rep.links[0].slack, -1.0);
  EXPECT_FALSE(rep.links[0].pass);
  EXPECT_FALSE(rep.passed());
}

}  // namespace
}  // namespace divbound
