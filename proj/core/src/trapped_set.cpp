// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#include "openbaker/trapped_set.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "openbaker/errors.hpp"
#include "openbaker/parallel.hpp"

namespace openbaker {
namespace {

Int128 lcm_denominators(const std::vector<Arc>& arcs) {
  Int128 den = 1;
  for (const Arc& arc : arcs) {
    for (const Rational& r : {arc.lo, arc.hi}) {
      Int128 a = den;
      Int128 b = r.denominator();
      while (b != 0) {
        Int128 t = a % b;
        a = b;
        b = t;
      }
      den = den / a * r.denominator();
    }
  }
  return den;
}

// Number of bits needed to hold `value`.
int bit_width128(UInt128 value) {
  int bits = 0;
  while (value != 0) {
    value >>= 1;
    ++bits;
  }
  return bits;
}

// Backward survivor recursion on a common denominator base * 2^k. UInt only
// has to hold numerators up to the final denominator.
template <class UInt>
class DoublingRecursion {
 public:
  struct Piece {
    UInt lo;
    UInt hi;
  };

  DoublingRecursion(const std::vector<Arc>& complement, UInt base, std::size_t cap)
      : scale_(base), cap_(cap) {
    for (const Arc& arc : complement) {
      Rational lo = arc.lo * Rational(static_cast<Int128>(base), 1);
      Rational hi = arc.hi * Rational(static_cast<Int128>(base), 1);
      Piece piece{static_cast<UInt>(lo.numerator()), static_cast<UInt>(hi.numerator())};
      complement_.push_back(piece);
      current_.push_back(piece);
    }
  }

  std::int64_t time() const noexcept { return time_; }
  UInt scale() const noexcept { return scale_; }
  std::size_t size() const noexcept { return current_.size(); }

  UInt measure_numerator() const noexcept {
    UInt total = 0;
    for (const Piece& piece : current_) total += piece.hi - piece.lo;
    return total;
  }

  Rational measure() const {
    return Rational(static_cast<Int128>(measure_numerator()), static_cast<Int128>(scale_));
  }

  void step() {
    const UInt shift = scale_;
    scale_ *= 2;
    for (Piece& arc : complement_) {
      arc.lo *= 2;
      arc.hi *= 2;
    }
    next_.clear();
    next_.reserve(std::min(2 * current_.size(), cap_ + 1));
    for (const Piece& piece : current_) emit(piece.lo, piece.hi);
    for (const Piece& piece : current_) emit(piece.lo + shift, piece.hi + shift);
    current_.swap(next_);
    next_.clear();
    next_.shrink_to_fit();
    ++time_;
  }

  IntervalUnion to_union() const {
    std::vector<ScaledInterval> pieces;
    pieces.reserve(current_.size());
    for (const Piece& piece : current_) pieces.push_back({piece.lo, piece.hi});
    return IntervalUnion(scale_, std::move(pieces));
  }

 private:
  void emit(UInt a, UInt b) {
    for (const Piece& arc : complement_) {
      UInt lo = a > arc.lo ? a : arc.lo;
      UInt hi = b < arc.hi ? b : arc.hi;
      if (lo >= hi) continue;
      if (!next_.empty() && next_.back().hi == lo) {
        next_.back().hi = hi;
        continue;
      }
      if (next_.size() >= cap_) {
        throw ResolutionExhausted("survivor set exceeds the interval cap of " + std::to_string(cap_) +
                                  " at t = " + std::to_string(time_ + 1));
      }
      next_.push_back({lo, hi});
    }
  }

  UInt scale_;
  std::size_t cap_;
  std::int64_t time_ = 0;
  std::vector<Piece> complement_;
  std::vector<Piece> current_;
  std::vector<Piece> next_;
};

// Calls fn(recursion) with a recursion whose integer type can reach t_max.
template <class Fn>
void with_recursion(const OpeningSpec& opening, std::int64_t t_max, const SurvivorOptions& options,
                    Fn&& fn) {
  if (t_max < 0) throw std::invalid_argument("survivor recursion: t must be non-negative");
  std::vector<Arc> complement = opening.complement_arcs();
  Int128 base = lcm_denominators(complement);
  // Numerators stay below base * 2^t_max; keep one spare bit for the
  // preimage shift.
  int bits = bit_width128(static_cast<UInt128>(base)) + static_cast<int>(std::min<std::int64_t>(t_max, 1000));
  if (bits <= 62) {
    DoublingRecursion<std::uint64_t> recursion(complement, static_cast<std::uint64_t>(base), options.interval_cap);
    fn(recursion);
  } else if (bits <= 126) {
    DoublingRecursion<UInt128> recursion(complement, static_cast<UInt128>(base), options.interval_cap);
    fn(recursion);
  } else {
    throw ResolutionExhausted("survivor recursion to t = " + std::to_string(t_max) +
                              " needs a denominator wider than 126 bits");
  }
}

}  // namespace

IntervalUnion survivor_set(const OpeningSpec& opening, std::int64_t t, const SurvivorOptions& options) {
  IntervalUnion out;
  with_recursion(opening, t, options, [&](auto& recursion) {
    while (recursion.time() < t) recursion.step();
    out = recursion.to_union();
  });
  return out;
}

SurvivalSeries area_series(const OpeningSpec& opening, std::int64_t t_max, const SurvivorOptions& options) {
  SurvivalSeries series{opening, {}};
  series.areas.reserve(static_cast<std::size_t>(t_max) + 1);
  with_recursion(opening, t_max, options, [&](auto& recursion) {
    series.areas.push_back({0, recursion.measure()});
    while (recursion.time() < t_max) {
      recursion.step();
      series.areas.push_back({recursion.time(), recursion.measure()});
    }
  });
  return series;
}

MonteCarloEstimate monte_carlo_area(const OpeningSpec& opening, std::int64_t t, std::uint64_t n_samples,
                                    std::uint64_t seed, std::size_t jobs) {
  if (n_samples == 0) throw std::invalid_argument("monte_carlo_area: n_samples must be positive");
  if (t < 0) throw std::invalid_argument("monte_carlo_area: t must be non-negative");
  constexpr std::uint64_t kChunk = 1 << 16;
  const std::uint64_t chunks = (n_samples + kChunk - 1) / kChunk;
  std::vector<std::uint64_t> survivors(chunks, 0);
  parallel_for(chunks, jobs, [&](std::size_t chunk) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
    std::mt19937_64 rng(seq);
    const std::uint64_t begin = chunk * kChunk;
    const std::uint64_t end = std::min(n_samples, begin + kChunk);
    std::uint64_t alive = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      double q = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (!survival_time({q, 0.0}, opening, t + 1)) ++alive;
    }
    survivors[chunk] = alive;
  });
  std::uint64_t total = 0;
  for (std::uint64_t s : survivors) total += s;
  const double n = static_cast<double>(n_samples);
  const double area = static_cast<double>(total) / n;
  return {area, std::sqrt(area * (1.0 - area) / n)};
}

EscapeRateFit escape_rate(const SurvivalSeries& series, std::int64_t t_min, std::int64_t t_max) {
  if (t_min < 1 || t_max <= t_min) {
    throw std::invalid_argument("escape_rate: need 1 <= t_min < t_max");
  }
  long double sum_t = 0, sum_y = 0, sum_tt = 0, sum_ty = 0;
  std::vector<std::pair<long double, long double>> points;
  for (const SurvivalPoint& point : series.areas) {
    if (point.t < t_min || point.t > t_max) continue;
    if (point.area <= Rational(0)) {
      throw NoTrappedSet("no trapped set at this resolution: A_fw(" + std::to_string(point.t) + ") = 0");
    }
    long double y = -(std::log(static_cast<long double>(point.area.numerator())) -
                      std::log(static_cast<long double>(point.area.denominator())));
    long double t = static_cast<long double>(point.t);
    points.emplace_back(t, y);
    sum_t += t;
    sum_y += y;
    sum_tt += t * t;
    sum_ty += t * y;
  }
  if (points.size() != static_cast<std::size_t>(t_max - t_min + 1)) {
    throw std::invalid_argument("escape_rate: series does not cover the fit range");
  }
  const long double n = static_cast<long double>(points.size());
  const long double slope = (n * sum_ty - sum_t * sum_y) / (n * sum_tt - sum_t * sum_t);
  const long double intercept = (sum_y - slope * sum_t) / n;
  long double sq = 0;
  for (auto [t, y] : points) {
    long double r = y - (intercept + slope * t);
    sq += r * r;
  }
  EscapeRateFit fit;
  fit.gamma_cl = static_cast<double>(slope);
  // Exact zero for the closed map rather than rounding noise.
  if (series.opening.is_closed()) fit.gamma_cl = 0.0;
  fit.t_min = t_min;
  fit.t_max = t_max;
  fit.residual = static_cast<double>(std::sqrt(sq / n));
  fit.information_dimension = 2.0 - fit.gamma_cl / std::numbers::ln2;
  return fit;
}

EscapeRateFit classical_escape_rate(const OpeningSpec& opening, std::int64_t t_min, std::int64_t t_max,
                                    const SurvivorOptions& options) {
  return escape_rate(area_series(opening, t_max, options), t_min, t_max);
}

std::vector<SweepPoint> qc_sweep(const Rational& width, const std::vector<Rational>& centers, std::int64_t t,
                                 const SurvivorOptions& options, std::size_t jobs) {
  std::vector<SweepPoint> out(centers.size());
  parallel_for(centers.size(), jobs, [&](std::size_t i) {
    OpeningSpec opening(centers[i], width);
    Rational area;
    with_recursion(opening, t, options, [&](auto& recursion) {
      while (recursion.time() < t) recursion.step();
      area = recursion.measure();
    });
    out[i] = {centers[i], width, t, area};
  });
  return out;
}

std::vector<Rational> rational_grid(const Rational& lo, const Rational& hi, const Rational& step) {
  if (step <= Rational(0)) throw std::invalid_argument("grid step must be positive");
  if (hi < lo) throw std::invalid_argument("grid upper bound below lower bound");
  std::vector<Rational> out;
  for (std::int64_t k = 0;; ++k) {
    Rational value = lo + Rational(k) * step;
    if (value > hi) break;
    out.push_back(value);
  }
  return out;
}

double TrappedRaster::trapped_fraction() const {
  if (trapped.empty()) return 0.0;
  std::size_t count = 0;
  for (std::uint8_t cell : trapped) count += cell;
  return static_cast<double>(count) / static_cast<double>(trapped.size());
}

TrappedRaster render_trapped_set(const OpeningSpec& opening, std::int64_t t, int resolution, RasterMode mode) {
  if (resolution < 16) throw std::invalid_argument("render_trapped_set: resolution must be at least 16");
  if (t < 0) throw std::invalid_argument("render_trapped_set: t must be non-negative");
  TrappedRaster raster;
  raster.resolution = resolution;
  const auto n = static_cast<std::size_t>(resolution);
  raster.trapped.assign(n * n, 0);
  const double cell = 1.0 / resolution;
  if (mode == RasterMode::initial) {
    std::vector<std::uint8_t> column(n);
    for (std::size_t c = 0; c < n; ++c) {
      double q = (static_cast<double>(c) + 0.5) * cell;
      column[c] = survival_time({q, 0.0}, opening, t + 1) ? 0 : 1;
    }
    for (std::size_t r = 0; r < n; ++r) {
      std::copy(column.begin(), column.end(), raster.trapped.begin() + static_cast<std::ptrdiff_t>(r * n));
    }
    return raster;
  }
  for (std::size_t r = 0; r < n; ++r) {
    double p = 1.0 - (static_cast<double>(r) + 0.5) * cell;
    for (std::size_t c = 0; c < n; ++c) {
      PhasePoint x{(static_cast<double>(c) + 0.5) * cell, p};
      for (std::int64_t k = 0; k < t; ++k) x = baker_inverse(x);
      raster.trapped[r * n + c] = survival_time(x, opening, t + 1) ? 0 : 1;
    }
  }
  return raster;
}

}  // namespace openbaker
