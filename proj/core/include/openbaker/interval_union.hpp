// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "openbaker/rational.hpp"
#include "openbaker/torus.hpp"

namespace openbaker {

/// Half-open interval [lo, hi) in units of 1/denominator.
struct ScaledInterval {
  UInt128 lo = 0;
  UInt128 hi = 0;

  friend bool operator==(const ScaledInterval&, const ScaledInterval&) = default;
};

/// Finite union of disjoint half-open subintervals of [0, 1) with exact
/// endpoints over a common denominator.
///
/// Invariants: intervals are non-empty, sorted, pairwise disjoint, and
/// touching neighbours (hi_i == lo_{i+1}) are merged. The measure is exact.
class IntervalUnion {
 public:
  IntervalUnion() = default;

  /// Normalizes `intervals` (drops empty pieces, merges touching ones).
  /// Throws std::invalid_argument if they are unsorted, overlapping, or
  /// leave [0, 1).
  IntervalUnion(UInt128 denominator, std::vector<ScaledInterval> intervals);

  static IntervalUnion full();
  static IntervalUnion from_arcs(const std::vector<Arc>& arcs);

  UInt128 denominator() const noexcept { return denominator_; }
  std::span<const ScaledInterval> intervals() const noexcept { return intervals_; }
  std::size_t size() const noexcept { return intervals_.size(); }
  bool empty() const noexcept { return intervals_.empty(); }

  Rational measure() const;
  bool contains(const Rational& q) const;
  std::vector<Arc> arcs() const;

 private:
  UInt128 denominator_ = 1;
  std::vector<ScaledInterval> intervals_;
};

}  // namespace openbaker
