// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "openbaker/complex_matrix.hpp"
#include "openbaker/eigensolver.hpp"
#include "openbaker/propagator.hpp"

namespace openbaker {

/// Spectrum of an open propagator: eigenvalues z_i ordered by modulus
/// nu_i = |z_i| descending (ties by phase ascending), with decay rates
/// Gamma_i = -2 ln nu_i. Exact zeros carry Gamma = +infinity.
class ResonanceSet {
 public:
  ResonanceSet() = default;

  /// Sorts `eigenvalues` into canonical order. Throws std::invalid_argument
  /// if the count does not match spec.dimension.
  ResonanceSet(PropagatorSpec spec, std::vector<Complex> eigenvalues);

  const PropagatorSpec& spec() const noexcept { return spec_; }
  std::size_t size() const noexcept { return eigenvalues_.size(); }

  std::span<const Complex> eigenvalues() const noexcept { return eigenvalues_; }
  std::span<const double> moduli() const noexcept { return moduli_; }
  std::span<const double> decay_rates() const noexcept { return decay_rates_; }

  Complex eigenvalue_sum() const noexcept;
  double max_modulus() const noexcept { return moduli_.empty() ? 0.0 : moduli_.front(); }
  std::size_t count_below(double nu) const noexcept;

 private:
  PropagatorSpec spec_;
  std::vector<Complex> eigenvalues_;
  std::vector<double> moduli_;
  std::vector<double> decay_rates_;
};

/// Decay rate -2 ln nu; +infinity for nu == 0.
double decay_rate(double modulus) noexcept;

/// Tolerance used by the contraction and trace checks.
inline constexpr double kContractionTolerance = 1e-8;

/// Builds B_N P, computes its spectrum and packages it. The M removed
/// columns contribute exact zeros; the rest comes from the kept block.
/// Throws if the eigenvalue sum misses trace(B_N P) by more than 1e-8 N.
ResonanceSet resonance_set(const PropagatorSpec& spec, const SolverOptions& options = {});

/// |sum z_i - trace(B_N P)|, rebuilt from the spec.
double trace_defect(const ResonanceSet& set);

}  // namespace openbaker
