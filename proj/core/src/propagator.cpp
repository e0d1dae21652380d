// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#include "openbaker/propagator.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace openbaker {
namespace {

void require_even(int dimension) {
  if (dimension < 2 || dimension % 2 != 0) {
    throw std::invalid_argument("quantization requires even dimension, got N = " + std::to_string(dimension));
  }
}

}  // namespace

Rational PropagatorSpec::position(int dimension, std::size_t j) {
  return Rational(2 * static_cast<Int128>(j) + 1, 2 * static_cast<Int128>(dimension));
}

std::vector<std::size_t> PropagatorSpec::kept_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < static_cast<std::size_t>(dimension); ++j) {
    if (!opening.contains(position(dimension, j))) out.push_back(j);
  }
  return out;
}

std::vector<std::size_t> PropagatorSpec::removed_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < static_cast<std::size_t>(dimension); ++j) {
    if (opening.contains(position(dimension, j))) out.push_back(j);
  }
  return out;
}

std::size_t PropagatorSpec::removed_count() const { return removed_indices().size(); }

ComplexMatrix gn_matrix(int dimension) {
  if (dimension <= 0) throw std::invalid_argument("gn_matrix: dimension must be positive");
  const auto n = static_cast<std::size_t>(dimension);
  const std::int64_t period = 4 * static_cast<std::int64_t>(dimension);
  const double norm = 1.0 / std::sqrt(static_cast<double>(dimension));
  ComplexMatrix g(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      // Phase (2j+1)(2k+1)/(4N) reduced exactly before going to floating point.
      std::int64_t m = ((2 * static_cast<std::int64_t>(j) + 1) * (2 * static_cast<std::int64_t>(k) + 1)) % period;
      g(j, k) = std::polar(norm, -std::numbers::pi * static_cast<double>(m) / (2.0 * dimension));
    }
  }
  return g;
}

ComplexMatrix baker_propagator(int dimension) {
  require_even(dimension);
  // Entry (r, c) of G_N^dagger blockdiag(G_h, G_h) is a geometric sum over the
  // block rows. For c < h it collapses to
  //   (i - (-1)^r) / (2 sqrt(N h) sin(pi (2r - 4c - 1) / (2N))),
  // and the second block picks up the factor exp(i pi (r + 1/2)) = i (-1)^r.
  const auto n = static_cast<std::size_t>(dimension);
  const std::size_t h = n / 2;
  const std::int64_t period = 4 * static_cast<std::int64_t>(dimension);
  const double scale = 1.0 / (2.0 * std::sqrt(static_cast<double>(dimension) * static_cast<double>(h)));
  ComplexMatrix b(n);
  for (std::size_t c = 0; c < h; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      std::int64_t m = (2 * static_cast<std::int64_t>(r) - 4 * static_cast<std::int64_t>(c) - 1) % period;
      if (m < 0) m += period;
      const double s = std::sin(std::numbers::pi * static_cast<double>(m) / (2.0 * dimension));
      const double sign = (r % 2 == 0) ? 1.0 : -1.0;
      const Complex entry = Complex(-sign, 1.0) * (scale / s);
      b(r, c) = entry;
      b(r, c + h) = entry * Complex(0.0, sign);
    }
  }
  return b;
}

ComplexMatrix opening_projector(const PropagatorSpec& spec) {
  if (spec.dimension <= 0) throw std::invalid_argument("opening_projector: dimension must be positive");
  ComplexMatrix p(static_cast<std::size_t>(spec.dimension));
  for (std::size_t j : spec.kept_indices()) p(j, j) = 1.0;
  return p;
}

ComplexMatrix open_propagator(const PropagatorSpec& spec) {
  ComplexMatrix b = baker_propagator(spec.dimension);
  for (std::size_t j : spec.removed_indices()) {
    for (Complex& z : b.column(j)) z = 0.0;
  }
  return b;
}

ComplexMatrix kept_block(const PropagatorSpec& spec) {
  ComplexMatrix b = baker_propagator(spec.dimension);
  const std::vector<std::size_t> kept = spec.kept_indices();
  ComplexMatrix out(kept.size());
  for (std::size_t c = 0; c < kept.size(); ++c) {
    for (std::size_t r = 0; r < kept.size(); ++r) out(r, c) = b(kept[r], kept[c]);
  }
  return out;
}

}  // namespace openbaker
