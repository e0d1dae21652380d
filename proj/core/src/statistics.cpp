// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#include "openbaker/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "openbaker/errors.hpp"
#include "openbaker/parallel.hpp"

namespace openbaker {

CumulativeCount::CumulativeCount(std::span<const double> moduli) : sorted_(moduli.begin(), moduli.end()) {
  if (sorted_.empty()) throw std::invalid_argument("cumulative count of an empty spectrum");
  std::sort(sorted_.begin(), sorted_.end());
}

std::size_t CumulativeCount::count_at_or_below(double nu) const noexcept {
  return static_cast<std::size_t>(std::upper_bound(sorted_.begin(), sorted_.end(), nu) - sorted_.begin());
}

std::size_t CumulativeCount::count_below(double nu) const noexcept {
  return static_cast<std::size_t>(std::lower_bound(sorted_.begin(), sorted_.end(), nu) - sorted_.begin());
}

double CumulativeCount::at(double nu) const noexcept {
  return static_cast<double>(count_at_or_below(nu)) / static_cast<double>(sorted_.size());
}

double CumulativeCount::below(double nu) const noexcept {
  return static_cast<double>(count_below(nu)) / static_cast<double>(sorted_.size());
}

std::vector<CumulativePoint> CumulativeCount::points() const {
  std::vector<CumulativePoint> out;
  const double n = static_cast<double>(sorted_.size());
  for (std::size_t i = 0; i < sorted_.size(); ++i) {
    if (i + 1 < sorted_.size() && sorted_[i + 1] == sorted_[i]) continue;
    out.push_back({sorted_[i], static_cast<double>(i + 1) / n});
  }
  return out;
}

CumulativeCount cumulative_count(const ResonanceSet& set) { return CumulativeCount(set.moduli()); }

double ModulusHistogram::fraction(std::size_t k) const noexcept {
  return static_cast<double>(counts[k]) / static_cast<double>(total);
}

double ModulusHistogram::density(std::size_t k) const noexcept { return fraction(k) / bin_width; }

ModulusHistogram modulus_histogram(std::span<const double> moduli, double bin_width, double lo, double hi) {
  if (!(bin_width > 0.0)) throw std::invalid_argument("modulus_histogram: bin width must be positive");
  if (!(hi > lo)) throw std::invalid_argument("modulus_histogram: empty range");
  if (moduli.empty()) throw std::invalid_argument("modulus_histogram: empty spectrum");
  const auto bins = static_cast<std::size_t>(std::llround((hi - lo) / bin_width));
  if (bins == 0) throw std::invalid_argument("modulus_histogram: range narrower than one bin");
  ModulusHistogram h;
  h.bin_width = bin_width;
  h.edges.resize(bins + 1);
  for (std::size_t k = 0; k < bins; ++k) h.edges[k] = lo + static_cast<double>(k) * bin_width;
  h.edges[bins] = hi;
  h.counts.assign(bins, 0);
  h.total = moduli.size();
  for (double nu : moduli) {
    if (nu < lo || nu > hi + kTopTolerance) continue;
    std::size_t k = bins - 1;
    if (nu < hi) k = static_cast<std::size_t>(std::upper_bound(h.edges.begin(), h.edges.end(), nu) - h.edges.begin()) - 1;
    ++h.counts[k];
  }
  return h;
}

ModulusHistogram modulus_histogram(const ResonanceSet& set, double bin_width, double lo, double hi) {
  return modulus_histogram(set.moduli(), bin_width, lo, hi);
}

ModulusHistogram tail_histogram(const ResonanceSet& set, double bin_width, double tail_cut) {
  return modulus_histogram(set.moduli(), bin_width, tail_cut, 1.0);
}

double half_height_width(const ModulusHistogram& histogram) {
  const std::size_t peak = *std::max_element(histogram.counts.begin(), histogram.counts.end());
  if (peak == 0) throw EmptyTail("half_height_width: no eigenvalue in the histogram range");
  const auto above = std::count_if(histogram.counts.begin(), histogram.counts.end(),
                                   [peak](std::size_t c) { return 2 * c >= peak; });
  return histogram.bin_width * static_cast<double>(above);
}

std::vector<WidthPoint> width_sweep(const std::vector<int>& dimensions, const std::vector<Rational>& centers,
                                    const Rational& width, const SpectrumProvider& provider, std::size_t jobs,
                                    double bin_width, double tail_cut) {
  std::vector<WidthPoint> out(dimensions.size() * centers.size());
  parallel_for(out.size(), jobs, [&](std::size_t idx) {
    WidthPoint& point = out[idx];
    point.dimension = dimensions[idx / centers.size()];
    point.center = centers[idx % centers.size()];
    try {
      ResonanceSet set = provider(PropagatorSpec{point.dimension, OpeningSpec(point.center, width)});
      point.sigma = half_height_width(tail_histogram(set, bin_width, tail_cut));
    } catch (const std::exception& e) {
      point.error = e.what();
    }
  });
  return out;
}

const RescaledBin& RescaledHistogram::peak() const {
  if (bins.empty()) throw EmptyTail("rescaled histogram has no bins");
  return *std::max_element(bins.begin(), bins.end(),
                           [](const RescaledBin& a, const RescaledBin& b) { return a.density < b.density; });
}

RescaledHistogram rescaled_decay_histogram(const ResonanceSet& set, double gamma_cl, double bin_width,
                                           double tail_cut) {
  if (!(gamma_cl > 0.0)) throw std::invalid_argument("rescaled_decay_histogram: gamma_cl must be positive");
  if (!(tail_cut > 0.0)) throw std::invalid_argument("rescaled_decay_histogram: tail cut must be positive");
  const ModulusHistogram tail = tail_histogram(set, bin_width, tail_cut);
  RescaledHistogram out;
  out.gamma_cl = gamma_cl;
  out.bins.reserve(tail.bins());
  for (std::size_t k = tail.bins(); k-- > 0;) {
    RescaledBin bin;
    bin.x_lo = -2.0 * std::log(tail.edges[k + 1]) / gamma_cl;
    bin.x_hi = -2.0 * std::log(tail.edges[k]) / gamma_cl;
    bin.fraction = tail.fraction(k);
    bin.density = bin.fraction / (bin.x_hi - bin.x_lo);
    out.bins.push_back(bin);
  }
  return out;
}

WeylDataPoint weyl_count(const ResonanceSet& set, double nu_cut) {
  if (!(nu_cut > 0.0 && nu_cut < 1.0)) throw std::invalid_argument("weyl_count: cut must lie in (0, 1)");
  auto moduli = set.moduli();
  const auto count = std::count_if(moduli.begin(), moduli.end(), [nu_cut](double m) { return m > nu_cut; });
  return {set.spec().dimension, static_cast<std::size_t>(count), nu_cut};
}

WeylFit weyl_fit(std::span<const WeylDataPoint> points, double reference_dimension) {
  if (points.size() < 4) throw std::invalid_argument("weyl_fit: need at least four points");
  int n_min = points.front().dimension;
  int n_max = n_min;
  for (const WeylDataPoint& p : points) {
    if (p.dimension <= 0) throw std::invalid_argument("weyl_fit: dimensions must be positive");
    if (p.count == 0) throw std::domain_error("weyl_fit: zero count at N = " + std::to_string(p.dimension));
    n_min = std::min(n_min, p.dimension);
    n_max = std::max(n_max, p.dimension);
  }
  if (n_max < 4 * n_min) throw std::invalid_argument("weyl_fit: points must span a factor of four in N");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const WeylDataPoint& p : points) {
    const double x = std::log10(static_cast<double>(p.dimension));
    const double y = std::log10(static_cast<double>(p.count));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(points.size());
  WeylFit fit;
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / n;
  fit.reference_slope = reference_dimension - 1.0;
  double sq = 0;
  for (const WeylDataPoint& p : points) {
    const double r = std::log10(static_cast<double>(p.count)) -
                     (fit.slope * std::log10(static_cast<double>(p.dimension)) + fit.intercept);
    sq += r * r;
  }
  fit.residual = std::sqrt(sq / n);
  fit.points.assign(points.begin(), points.end());
  return fit;
}

}  // namespace openbaker
