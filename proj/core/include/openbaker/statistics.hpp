// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "openbaker/rational.hpp"
#include "openbaker/resonance.hpp"

namespace openbaker {

/// Defaults for the modulus statistics.
inline constexpr double kDefaultBinWidth = 0.01;
inline constexpr double kDefaultTailCut = 0.7;
inline constexpr double kDefaultWeylCut = 0.3;
/// Moduli up to 1 + kTopTolerance land in the top bin.
inline constexpr double kTopTolerance = 1e-8;

struct CumulativePoint {
  double nu = 0.0;
  double n = 0.0;
};

/// Normalized cumulative resonance count n(nu) = #{i : nu_i <= nu} / N.
class CumulativeCount {
 public:
  explicit CumulativeCount(std::span<const double> moduli);

  std::size_t size() const noexcept { return sorted_.size(); }
  std::size_t count_at_or_below(double nu) const noexcept;
  std::size_t count_below(double nu) const noexcept;
  double at(double nu) const noexcept;
  double below(double nu) const noexcept;

  /// One (nu, n) pair per distinct modulus, ascending; the step heights of n.
  std::vector<CumulativePoint> points() const;

 private:
  std::vector<double> sorted_;
};

CumulativeCount cumulative_count(const ResonanceSet& set);

/// Modulus histogram over [lo, hi) with equal bins. Bin k covers
/// [edges[k], edges[k+1]); moduli in [hi, hi + kTopTolerance] are folded into
/// the last bin. Densities are relative to all N eigenvalues, so
/// W_k = count_k / (N dnu) approximates dn/dnu.
struct ModulusHistogram {
  double bin_width = kDefaultBinWidth;
  std::vector<double> edges;
  std::vector<std::size_t> counts;
  std::size_t total = 0;

  std::size_t bins() const noexcept { return counts.size(); }
  double lo() const noexcept { return edges.front(); }
  double hi() const noexcept { return edges.back(); }
  double fraction(std::size_t k) const noexcept;
  double density(std::size_t k) const noexcept;
};

ModulusHistogram modulus_histogram(std::span<const double> moduli, double bin_width = kDefaultBinWidth,
                                   double lo = 0.0, double hi = 1.0);
ModulusHistogram modulus_histogram(const ResonanceSet& set, double bin_width = kDefaultBinWidth, double lo = 0.0,
                                   double hi = 1.0);

/// Long-lived tail: modulus histogram over [tail_cut, 1).
ModulusHistogram tail_histogram(const ResonanceSet& set, double bin_width = kDefaultBinWidth,
                                double tail_cut = kDefaultTailCut);

/// Total width of the bins whose density reaches half the maximum. With
/// several peaks every bin above half height counts. Throws EmptyTail if the
/// histogram holds no eigenvalue.
double half_height_width(const ModulusHistogram& histogram);

/// Produces the spectrum of a spec, typically through the spectrum cache.
using SpectrumProvider = std::function<ResonanceSet(const PropagatorSpec&)>;

struct WidthPoint {
  int dimension = 0;
  Rational center;
  double sigma = 0.0;
  /// Empty on success, otherwise the failure that was recorded for this point.
  std::string error;

  bool ok() const noexcept { return error.empty(); }
};

/// sigma(N, q_c) for every pair; a failing point is recorded and the sweep
/// continues. Output order is dimensions-major, then centers.
std::vector<WidthPoint> width_sweep(const std::vector<int>& dimensions, const std::vector<Rational>& centers,
                                    const Rational& width, const SpectrumProvider& provider, std::size_t jobs = 1,
                                    double bin_width = kDefaultBinWidth, double tail_cut = kDefaultTailCut);

/// One tail modulus bin re-expressed in x = Gamma / gamma_cl. The bin keeps
/// its content; its width in x varies because Gamma = -2 ln nu.
struct RescaledBin {
  double x_lo = 0.0;
  double x_hi = 0.0;
  double fraction = 0.0;
  double density = 0.0;

  double center() const noexcept { return 0.5 * (x_lo + x_hi); }
};

struct RescaledHistogram {
  double gamma_cl = 0.0;
  std::vector<RescaledBin> bins;  // ascending in x

  /// Bin with the largest density (first one on ties).
  const RescaledBin& peak() const;
};

/// Decay-rate distribution of the tail (nu > tail_cut) rescaled by the
/// classical escape rate; zero modes never enter. Throws
/// std::invalid_argument for gamma_cl <= 0.
RescaledHistogram rescaled_decay_histogram(const ResonanceSet& set, double gamma_cl,
                                           double bin_width = kDefaultBinWidth,
                                           double tail_cut = kDefaultTailCut);

struct WeylDataPoint {
  int dimension = 0;
  std::size_t count = 0;
  double nu_cut = kDefaultWeylCut;
};

/// Number of resonances with nu > nu_cut.
WeylDataPoint weyl_count(const ResonanceSet& set, double nu_cut = kDefaultWeylCut);

/// Least-squares line log10(count) = slope * log10(N) + intercept, compared
/// with the fractal-Weyl slope d - 1.
struct WeylFit {
  double slope = 0.0;
  double intercept = 0.0;
  double reference_slope = 0.0;
  /// RMS residual of the fitted line.
  double residual = 0.0;
  std::vector<WeylDataPoint> points;

  double slope_deviation() const noexcept { return slope - reference_slope; }
};

/// Needs at least four points spanning a factor of four in N, all with
/// positive counts.
WeylFit weyl_fit(std::span<const WeylDataPoint> points, double reference_dimension);

}  // namespace openbaker
