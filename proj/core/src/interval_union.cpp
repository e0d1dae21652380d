// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#include "openbaker/interval_union.hpp"

#include <algorithm>
#include <stdexcept>

namespace openbaker {

IntervalUnion::IntervalUnion(UInt128 denominator, std::vector<ScaledInterval> intervals)
    : denominator_(denominator) {
  if (denominator == 0) throw std::invalid_argument("IntervalUnion: zero denominator");
  intervals_.reserve(intervals.size());
  for (const ScaledInterval& piece : intervals) {
    if (piece.hi > denominator) throw std::invalid_argument("IntervalUnion: interval leaves [0, 1)");
    if (piece.lo >= piece.hi) continue;
    if (!intervals_.empty()) {
      ScaledInterval& back = intervals_.back();
      if (piece.lo < back.hi) throw std::invalid_argument("IntervalUnion: intervals unsorted or overlapping");
      if (piece.lo == back.hi) {
        back.hi = piece.hi;
        continue;
      }
    }
    intervals_.push_back(piece);
  }
}

IntervalUnion IntervalUnion::full() { return IntervalUnion(1, {{0, 1}}); }

IntervalUnion IntervalUnion::from_arcs(const std::vector<Arc>& arcs) {
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
  std::vector<ScaledInterval> pieces;
  pieces.reserve(arcs.size());
  for (const Arc& arc : arcs) {
    Rational lo = arc.lo * Rational(den, 1);
    Rational hi = arc.hi * Rational(den, 1);
    pieces.push_back({static_cast<UInt128>(lo.numerator()), static_cast<UInt128>(hi.numerator())});
  }
  return IntervalUnion(static_cast<UInt128>(den), std::move(pieces));
}

Rational IntervalUnion::measure() const {
  UInt128 total = 0;
  for (const ScaledInterval& piece : intervals_) total += piece.hi - piece.lo;
  return Rational(static_cast<Int128>(total), static_cast<Int128>(denominator_));
}

bool IntervalUnion::contains(const Rational& q) const {
  if (q < Rational(0) || q >= Rational(1)) return false;
  // q = n/d lies in [lo/D, hi/D) iff lo*d <= n*D < hi*d.
  Rational scaled = q * Rational(static_cast<Int128>(denominator_), 1);
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), scaled,
                             [](const Rational& value, const ScaledInterval& piece) {
                               return value < Rational(static_cast<Int128>(piece.lo), 1);
                             });
  if (it == intervals_.begin()) return false;
  --it;
  return scaled < Rational(static_cast<Int128>(it->hi), 1);
}

std::vector<Arc> IntervalUnion::arcs() const {
  std::vector<Arc> out;
  out.reserve(intervals_.size());
  Int128 den = static_cast<Int128>(denominator_);
  for (const ScaledInterval& piece : intervals_) {
    out.push_back({Rational(static_cast<Int128>(piece.lo), den), Rational(static_cast<Int128>(piece.hi), den)});
  }
  return out;
}

}  // namespace openbaker
