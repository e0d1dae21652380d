// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#include "openbaker/torus.hpp"

#include <stdexcept>

namespace openbaker {

OpeningSpec::OpeningSpec(Rational center, Rational width)
    : center_(center), width_(width) {
  if (center < Rational(0) || center > Rational(1)) {
    throw std::invalid_argument("opening center must lie in [0, 1], got " + center.to_decimal_string());
  }
  if (width < Rational(0) || width > Rational(1)) {
    throw std::invalid_argument("opening width must lie in [0, 1], got " + width.to_decimal_string());
  }
  lo_ = (center_ - width_ / Rational(2)).fractional_part();
  Rational hi = lo_ + width_;
  lo_value_ = lo_.to_double();
  hi_value_ = hi.to_double();
  wrap_value_ = hi > Rational(1) ? (hi - Rational(1)).to_double() : 0.0;
}

OpeningSpec::OpeningSpec(double center, double width)
    : OpeningSpec(Rational::from_double(center), Rational::from_double(width)) {}

std::vector<Arc> OpeningSpec::hole_arcs() const {
  if (is_closed()) return {};
  if (removes_everything()) return {{Rational(0), Rational(1)}};
  Rational hi = lo_ + width_;
  if (hi <= Rational(1)) return {{lo_, hi}};
  return {{Rational(0), hi - Rational(1)}, {lo_, Rational(1)}};
}

std::vector<Arc> OpeningSpec::complement_arcs() const {
  if (is_closed()) return {{Rational(0), Rational(1)}};
  if (removes_everything()) return {};
  Rational hi = lo_ + width_;
  if (hi > Rational(1)) return {{hi - Rational(1), lo_}};
  std::vector<Arc> out;
  if (lo_ > Rational(0)) out.push_back({Rational(0), lo_});
  if (hi < Rational(1)) out.push_back({hi, Rational(1)});
  return out;
}

bool OpeningSpec::contains(double q) const noexcept {
  if (is_closed()) return false;
  if (removes_everything()) return true;
  if (hi_value_ <= 1.0) return q >= lo_value_ && q < hi_value_;
  return q >= lo_value_ || q < wrap_value_;
}

bool OpeningSpec::contains(const Rational& q) const {
  for (const Arc& arc : hole_arcs()) {
    if (q >= arc.lo && q < arc.hi) return true;
  }
  return false;
}

PhasePoint baker_forward(PhasePoint x) noexcept {
  if (x.q < 0.5) return {2.0 * x.q, 0.5 * x.p};
  return {2.0 * x.q - 1.0, 0.5 * (x.p + 1.0)};
}

PhasePoint baker_inverse(PhasePoint x) noexcept {
  if (x.p < 0.5) return {0.5 * x.q, 2.0 * x.p};
  return {0.5 * (x.q + 1.0), 2.0 * x.p - 1.0};
}

bool in_opening(PhasePoint x, const OpeningSpec& opening) noexcept { return opening.contains(x.q); }

std::optional<std::int64_t> survival_time(PhasePoint x, const OpeningSpec& opening,
                                          std::int64_t t_max) {
  if (t_max < 0) throw std::invalid_argument("survival_time: t_max must be non-negative");
  for (std::int64_t t = 0; t < t_max; ++t) {
    if (opening.contains(x.q)) return t;
    x = baker_forward(x);
  }
  return std::nullopt;
}

}  // namespace openbaker
