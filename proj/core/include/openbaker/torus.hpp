// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "openbaker/rational.hpp"

namespace openbaker {

/// A point (q, p) of the unit torus [0,1) x [0,1).
struct PhasePoint {
  double q = 0.0;
  double p = 0.0;

  friend bool operator==(const PhasePoint&, const PhasePoint&) = default;
};

/// Half-open arc [lo, hi) of the circle [0, 1) with exact endpoints.
struct Arc {
  Rational lo;
  Rational hi;
};

/// Escape strip of width `width` centred at `center`, spanning all p.
///
/// The strip is the half-open arc [center - width/2, center + width/2) taken
/// mod 1, so openings near q = 0 wrap into two arcs. Width 0 is the closed
/// map and width 1 removes the whole torus. Geometry is held exactly; the
/// double constructor reads each argument as its shortest decimal spelling.
class OpeningSpec {
 public:
  OpeningSpec() = default;
  OpeningSpec(Rational center, Rational width);
  OpeningSpec(double center, double width);

  static OpeningSpec closed() { return OpeningSpec(); }

  const Rational& center() const noexcept { return center_; }
  const Rational& width() const noexcept { return width_; }
  double center_value() const noexcept { return center_.to_double(); }
  double width_value() const noexcept { return width_.to_double(); }

  bool is_closed() const noexcept { return width_ == Rational(0); }
  bool removes_everything() const noexcept { return width_ >= Rational(1); }

  /// The hole as sorted disjoint arcs inside [0, 1) (zero, one or two).
  std::vector<Arc> hole_arcs() const;

  /// The complement of the hole as sorted disjoint arcs inside [0, 1).
  std::vector<Arc> complement_arcs() const;

  bool contains(double q) const noexcept;
  bool contains(const Rational& q) const;

 private:
  Rational center_{0};
  Rational width_{0};
  // Left end reduced into [0, 1); the right end is lo_ + width_ and may pass 1.
  Rational lo_{0};
  double lo_value_ = 0.0;
  double hi_value_ = 0.0;
  double wrap_value_ = 0.0;  // hi - 1 when the strip wraps
};

/// Closed baker map: (2q, p/2) for q < 1/2, (2q - 1, (p + 1)/2) otherwise.
PhasePoint baker_forward(PhasePoint x) noexcept;

/// Inverse of baker_forward: (q/2, 2p) for p < 1/2, ((q + 1)/2, 2p - 1) otherwise.
PhasePoint baker_inverse(PhasePoint x) noexcept;

bool in_opening(PhasePoint x, const OpeningSpec& opening) noexcept;

/// First step t in [0, t_max) at which the t-th iterate of `x` lies in the
/// opening, or std::nullopt when the orbit avoids it for t_max steps. Each
/// step tests before mapping, matching the operator order B P.
std::optional<std::int64_t> survival_time(PhasePoint x, const OpeningSpec& opening,
                                          std::int64_t t_max);

}  // namespace openbaker
