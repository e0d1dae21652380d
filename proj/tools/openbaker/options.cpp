// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#include "options.hpp"

#include <stdexcept>

#include <fmt/format.h>

#include "openbaker/trapped_set.hpp"

namespace openbaker::cli {

std::vector<Rational> parse_grid(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos) throw std::invalid_argument("grid must be lo:hi:step, got '" + std::string(text) + "'");
  const Rational lo = Rational::from_decimal(text.substr(0, first));
  const Rational hi = Rational::from_decimal(text.substr(first + 1, second - first - 1));
  const Rational step = Rational::from_decimal(text.substr(second + 1));
  return rational_grid(lo, hi, step);
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (const std::string& v : values) out.push_back(Rational::from_decimal(v));
  return out;
}

void require_even(const std::vector<int>& dimensions) {
  for (int n : dimensions) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument(fmt::format("quantization requires even dimension, got N = {}", n));
  }
}

std::string tag(int dimension, const Rational& center, const Rational& width) {
  return fmt::format("N{}_{}", dimension, tag(center, width));
}

std::string tag(const Rational& center, const Rational& width) {
  auto clean = [](std::string s) {
    for (char& c : s)
      if (c == '/') c = '_';
    return s;
  };
  return fmt::format("qc{}_dq{}", clean(center.to_decimal_string()), clean(width.to_decimal_string()));
}

}  // namespace openbaker::cli
