// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace openbaker {

__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

/// Exact rational number with 128-bit numerator and denominator, always kept
/// in lowest terms with a positive denominator. Arithmetic throws
/// std::overflow_error rather than wrapping.
///
/// Opening geometry is specified in decimal (q_c = 0.3, dq = 0.05, ...) and
/// every hole endpoint, preimage endpoint and trapped-set measure derived from
/// it stays exact in this type.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(Int128 numerator, Int128 denominator);
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT

  /// Parses "0.35", "-1.5", "7", "3/20" or "2.5e-2" exactly.
  static Rational from_decimal(std::string_view text);

  /// Exact value of the shortest decimal string that round-trips `value`,
  /// so from_double(0.1) == 1/10 rather than the binary expansion of 0.1.
  static Rational from_double(double value);

  Int128 numerator() const noexcept { return num_; }
  Int128 denominator() const noexcept { return den_; }

  double to_double() const noexcept;
  long double to_long_double() const noexcept;

  /// "n/d", or "n" when the denominator is one.
  std::string to_string() const;

  /// Shortest decimal rendering if the denominator is of the form 2^a 5^b,
  /// otherwise the fraction form.
  std::string to_decimal_string() const;

  /// Largest integer not above the value.
  Int128 floor() const noexcept;

  /// Value reduced into [0, 1).
  Rational fractional_part() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& other) { return *this = *this + other; }
  Rational& operator-=(const Rational& other) { return *this = *this - other; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  Int128 num_ = 0;
  Int128 den_ = 1;
};

/// Decimal rendering of a 128-bit integer.
std::string to_string(Int128 value);
std::string to_string(UInt128 value);

}  // namespace openbaker
