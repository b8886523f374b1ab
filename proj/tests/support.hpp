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

// Shared helpers for the test binaries. The oracles below are written from
// the textbook definitions in long double, deliberately avoiding the
// rearranged forms the library uses.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <utility>
#include <vector>

#include "divbound/simplex.hpp"

namespace divbound::testing {

using LD = long double;

inline Distribution dist(std::initializer_list<double> values) {
  return validate(std::vector<double>(values));
}

/// Pairs drawn over dims and a spread of concentrations; deterministic.
inline std::vector<std::pair<Distribution, Distribution>> random_pairs(
    std::size_t count, std::uint64_t seed, const std::vector<std::size_t>& dims = {2, 4, 8, 32},
    const std::vector<double>& concs = {0.3, 1.0, 5.0}) {
  std::vector<std::pair<Distribution, Distribution>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = dims[i % dims.size()];
    const double c = concs[(i / dims.size()) % concs.size()];
    const std::uint64_t base = mix64(seed + 2 * i);
    out.emplace_back(sample(n, base, c), sample(n, mix64(base + 1), c));
  }
  return out;
}

/// |a - b| <= tol * max(|a|, |b|), exact zeros compare equal.
inline bool rel_close(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::fmax(std::fabs(a), std::fabs(b));
}

inline double rel_err(double a, double b) {
  const double scale = std::fmax(std::fabs(a), std::fabs(b));
  return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

/// |a - b| <= tol * max(1, |a|, |b|); for identities that cancel to ~0.
inline bool scale_close(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::fmax(1.0, std::fmax(std::fabs(a), std::fabs(b)));
}

namespace oracle {

template <typename Term>
LD sum(const Distribution& p, const Distribution& q, Term term) {
  LD total = 0.0L;
  for (std::size_t i = 0; i < p.size(); ++i) total += term(LD(p[i]), LD(q[i]));
  return total;
}

inline LD bhattacharya(const Distribution& p, const Distribution& q) {
  return sum(p, q, [](LD a, LD b) { return std::sqrt(a * b); });
}
inline LD hellinger(const Distribution& p, const Distribution& q) {
  return 1.0L - bhattacharya(p, q);
}
inline LD chi2(const Distribution& p, const Distribution& q) {
  return sum(p, q, [](LD a, LD b) { return a * a / b; }) - 1.0L;
}
inline LD kl(const Distribution& p, const Distribution& q) {
  return sum(p, q, [](LD a, LD b) { return a * std::log(a / b); });
}
inline LD triangular(const Distribution& p, const Distribution& q) {
  return sum(p, q, [](LD a, LD b) { return (a - b) * (a - b) / (a + b); });
}
inline LD harmonic(const Distribution& p, const Distribution& q) {
  return sum(p, q, [](LD a, LD b) { return 2.0L * a * b / (a + b); });
}
inline LD j_div(const Distribution& p, const Distribution& q) { return kl(p, q) + kl(q, p); }
inline LD sym_chi2(const Distribution& p, const Distribution& q) {
  return chi2(p, q) + chi2(q, p);
}

// f_delta(x) = (x-1)^2/(x+1), f_psi(x) = (x-1)^2 (x+1)/x and derivatives.
inline LD f_delta(LD x) { return (x - 1) * (x - 1) / (x + 1); }
inline LD f1_delta(LD x) { return (x - 1) * (x + 3) / ((x + 1) * (x + 1)); }
inline LD f2_delta(LD x) { return 8.0L / ((x + 1) * (x + 1) * (x + 1)); }
inline LD f_psi(LD x) { return (x - 1) * (x - 1) * (x + 1) / x; }
inline LD f1_psi(LD x) { return (x - 1) * (2 * x * x + x + 1) / (x * x); }
inline LD f2_psi(LD x) { return 2.0L * (x * x * x + 1) / (x * x * x); }

inline LD rho_delta(const Distribution& p, const Distribution& q) {
  return sum(p, q, [](LD a, LD b) { return (a - b) * f1_delta(a / b); });
}
inline LD rho_psi(const Distribution& p, const Distribution& q) {
  return sum(p, q, [](LD a, LD b) { return (a - b) * f1_psi(a / b); });
}

inline LD phi_s(LD s, const Distribution& p, const Distribution& q) {
  if (s == 0.0L) return kl(q, p);
  if (s == 1.0L) return kl(p, q);
  const LD total = sum(p, q, [s](LD a, LD b) { return std::pow(a, s) * std::pow(b, 1 - s); });
  return (total - 1.0L) / (s * (s - 1.0L));
}

inline LD rho_phi_s(LD s, const Distribution& p, const Distribution& q) {
  if (s == 1.0L) return j_div(p, q);
  return sum(p, q, [s](LD a, LD b) { return (a - b) * std::pow(a / b, s - 1); }) / (s - 1.0L);
}

/// The three-branch p-logarithmic power mean, straight from its definition.
inline LD power_mean(LD p, LD a, LD b) {
  if (a == b) return a;
  if (p == -1.0L) return (b - a) / (std::log(b) - std::log(a));
  if (p == 0.0L) return std::exp(-1.0L) * std::pow(std::pow(b, b) / std::pow(a, a), 1 / (b - a));
  return std::pow((std::pow(b, p + 1) - std::pow(a, p + 1)) / ((p + 1) * (b - a)), 1 / p);
}

/// Secant value [(R-1) f(r) + (1-r) f(R)] / (R-r).
inline LD secant(const std::function<LD(LD)>& f, LD r, LD R) {
  return ((R - 1) * f(r) + (1 - r) * f(R)) / (R - r);
}

/// min and max of g over an evenly spaced grid on [lo, hi] with `points` nodes.
inline std::pair<LD, LD> grid_extrema(const std::function<LD(LD)>& g, LD lo, LD hi,
                                      std::size_t points) {
  LD mn = g(lo);
  LD mx = mn;
  for (std::size_t k = 1; k < points; ++k) {
    const LD x = lo + (hi - lo) * LD(k) / LD(points - 1);
    const LD v = g(x);
    mn = std::fmin(mn, v);
    mx = std::fmax(mx, v);
  }
  return {mn, mx};
}

/// Grid search followed by a second grid on the cells around each winner.
inline std::pair<LD, LD> refined_extrema(const std::function<LD(LD)>& g, LD lo, LD hi,
                                         std::size_t points) {
  const LD step = (hi - lo) / LD(points - 1);
  LD arg_mn = lo, arg_mx = lo, mn = g(lo), mx = mn;
  for (std::size_t k = 1; k < points; ++k) {
    const LD x = lo + step * LD(k);
    const LD v = g(x);
    if (v < mn) mn = v, arg_mn = x;
    if (v > mx) mx = v, arg_mx = x;
  }
  const auto local = [&](LD centre) {
    return grid_extrema(g, std::fmax(lo, centre - step), std::fmin(hi, centre + step), points);
  };
  return {std::fmin(mn, local(arg_mn).first), std::fmax(mx, local(arg_mx).second)};
}

inline LD g_delta(LD s, LD x) { return std::pow(x, 2 - s) * f2_delta(x); }
inline LD g_psi(LD s, LD x) { return std::pow(x, 2 - s) * f2_psi(x); }

}  // namespace oracle
}  // namespace divbound::testing
