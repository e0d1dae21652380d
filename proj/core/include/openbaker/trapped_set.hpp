// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "openbaker/interval_union.hpp"
#include "openbaker/rational.hpp"
#include "openbaker/torus.hpp"

namespace openbaker {

struct SurvivorOptions {
  /// Fail with ResolutionExhausted once a survivor set would hold more intervals.
  std::size_t interval_cap = 100'000'000;
};

/// Exact set of q whose doubling-map orbit avoids the hole at times 0..t.
///
/// Because the strip spans all of p, escape through it depends only on the
/// q-dynamics q -> 2q mod 1, and the forward-trapped area A_fw(t) of the
/// baker map equals the measure of this set. Computed by the backward
/// recursion S_0 = H^c, S_{k+1} = H^c ∩ D^{-1}(S_k) with
/// D^{-1}[a, b) = [a/2, b/2) ∪ [(a+1)/2, (b+1)/2).
IntervalUnion survivor_set(const OpeningSpec& opening, std::int64_t t,
                           const SurvivorOptions& options = {});

struct SurvivalPoint {
  std::int64_t t = 0;
  Rational area;
};

/// A_fw(t) for t = 0..t_max. Areas are non-increasing, start at 1 - dq and
/// satisfy the union bound A_fw(t) >= 1 - (t + 1) dq.
struct SurvivalSeries {
  OpeningSpec opening;
  std::vector<SurvivalPoint> areas;
};

SurvivalSeries area_series(const OpeningSpec& opening, std::int64_t t_max,
                           const SurvivorOptions& options = {});

struct MonteCarloEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

/// Fraction of uniformly drawn q surviving t + 1 absorption tests, with
/// binomial standard error sqrt(A(1 - A)/n). Samples are drawn in fixed
/// chunks with per-chunk seeds, so the result depends on `seed` but not on
/// `jobs`.
MonteCarloEstimate monte_carlo_area(const OpeningSpec& opening, std::int64_t t,
                                    std::uint64_t n_samples, std::uint64_t seed,
                                    std::size_t jobs = 1);

struct EscapeRateFit {
  double gamma_cl = 0.0;
  std::int64_t t_min = 0;
  std::int64_t t_max = 0;
  /// RMS deviation of -ln A_fw(t) from the fitted line.
  double residual = 0.0;
  /// 2 - gamma_cl / ln 2.
  double information_dimension = 2.0;
};

/// Least-squares slope of -ln A_fw(t) against t over [t_min, t_max].
/// Throws NoTrappedSet if any area in range vanishes.
EscapeRateFit escape_rate(const SurvivalSeries& series, std::int64_t t_min = 5,
                          std::int64_t t_max = 25);

/// Convenience: area_series followed by escape_rate over the same window.
EscapeRateFit classical_escape_rate(const OpeningSpec& opening, std::int64_t t_min = 5,
                                    std::int64_t t_max = 25,
                                    const SurvivorOptions& options = {});

struct SweepPoint {
  Rational center;
  Rational width;
  std::int64_t t = 0;
  Rational area;
};

/// A_fw(t) for each strip centre in `centers` at fixed width.
std::vector<SweepPoint> qc_sweep(const Rational& width, const std::vector<Rational>& centers,
                                 std::int64_t t = 9, const SurvivorOptions& options = {},
                                 std::size_t jobs = 1);

/// Inclusive arithmetic grid lo, lo + step, ..., <= hi, computed exactly.
std::vector<Rational> rational_grid(const Rational& lo, const Rational& hi, const Rational& step);

enum class RasterMode {
  /// Surviving initial conditions: vertical Cantor strips times all p.
  initial,
  /// The t-step forward image of the survivors; structure develops in p.
  image,
};

/// Square binary raster over the torus. Row r holds p = 1 - (r + 1/2)/n
/// (top row is largest p), column c holds q = (c + 1/2)/n.
struct TrappedRaster {
  int resolution = 0;
  std::vector<std::uint8_t> trapped;  // row-major, 1 = trapped

  bool at(int row, int col) const { return trapped[static_cast<std::size_t>(row) * resolution + col] != 0; }
  double trapped_fraction() const;
};

/// Cell-centre membership raster of the t-step trapped set.
TrappedRaster render_trapped_set(const OpeningSpec& opening, std::int64_t t, int resolution,
                                 RasterMode mode);

}  // namespace openbaker
