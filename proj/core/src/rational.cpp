// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#include "openbaker/rational.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <system_error>

namespace openbaker {
namespace {

Int128 abs128(Int128 v) { return v < 0 ? -v : v; }

Int128 gcd128(Int128 a, Int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    Int128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Int128 checked_mul(Int128 a, Int128 b) {
  Int128 out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("Rational: multiplication overflow");
  return out;
}

Int128 checked_add(Int128 a, Int128 b) {
  Int128 out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("Rational: addition overflow");
  return out;
}

Rational parse_plain_decimal(std::string_view text) {
  bool negative = false;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  Int128 num = 0;
  Int128 den = 1;
  bool seen_digit = false;
  bool seen_point = false;
  int exponent = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c >= '0' && c <= '9') {
      num = checked_add(checked_mul(num, 10), c - '0');
      if (seen_point) den = checked_mul(den, 10);
      seen_digit = true;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else if ((c == 'e' || c == 'E') && seen_digit) {
      std::string_view rest = text.substr(pos + 1);
      if (!rest.empty() && rest.front() == '+') rest.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), exponent);
      if (ec != std::errc() || ptr != rest.data() + rest.size()) {
        throw std::invalid_argument("malformed exponent in '" + std::string(text) + "'");
      }
      pos = text.size();
      break;
    } else {
      throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
    }
  }
  if (!seen_digit) throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
  if (exponent > 36 || exponent < -36) throw std::overflow_error("decimal exponent out of range");
  for (; exponent > 0; --exponent) num = checked_mul(num, 10);
  for (; exponent < 0; ++exponent) den = checked_mul(den, 10);
  return Rational(negative ? -num : num, den);
}

}  // namespace

Rational::Rational(Int128 numerator, Int128 denominator) {
  if (denominator == 0) throw std::invalid_argument("Rational: zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  Int128 g = gcd128(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  num_ = numerator;
  den_ = denominator;
}

Rational Rational::from_decimal(std::string_view text) {
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    Rational top = parse_plain_decimal(text.substr(0, slash));
    Rational bottom = parse_plain_decimal(text.substr(slash + 1));
    return top / bottom;
  }
  return parse_plain_decimal(text);
}

Rational Rational::from_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw std::invalid_argument("Rational::from_double: formatting failed");
  return from_decimal(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
}

double Rational::to_double() const noexcept { return static_cast<double>(to_long_double()); }

long double Rational::to_long_double() const noexcept {
  return static_cast<long double>(num_) / static_cast<long double>(den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return openbaker::to_string(num_);
  return openbaker::to_string(num_) + "/" + openbaker::to_string(den_);
}

std::string Rational::to_decimal_string() const {
  Int128 d = den_;
  int twos = 0;
  int fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return to_string();
  int digits = std::max(twos, fives);
  Int128 scaled = num_;
  try {
    for (int i = twos; i < digits; ++i) scaled = checked_mul(scaled, 2);
    for (int i = fives; i < digits; ++i) scaled = checked_mul(scaled, 5);
  } catch (const std::overflow_error&) {
    return to_string();
  }
  bool negative = scaled < 0;
  std::string body = openbaker::to_string(abs128(scaled));
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + body : body;
}

Int128 Rational::floor() const noexcept {
  Int128 q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Rational Rational::fractional_part() const { return *this - Rational(floor(), 1); }

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational operator+(const Rational& a, const Rational& b) {
  Int128 g = gcd128(a.den_, b.den_);
  Int128 bd = b.den_ / g;
  Int128 num = checked_add(checked_mul(a.num_, bd), checked_mul(b.num_, a.den_ / g));
  return Rational(num, checked_mul(a.den_, bd));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  Int128 g1 = gcd128(a.num_, b.den_);
  Int128 g2 = gcd128(b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Rational(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Int128 lhs = checked_mul(a.num_, b.den_);
  Int128 rhs = checked_mul(b.num_, a.den_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(UInt128 value) {
  if (value == 0) return "0";
  std::string out;
  while (value != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string to_string(Int128 value) {
  if (value < 0) return "-" + to_string(static_cast<UInt128>(-(value + 1)) + 1);
  return to_string(static_cast<UInt128>(value));
}

}  // namespace openbaker
