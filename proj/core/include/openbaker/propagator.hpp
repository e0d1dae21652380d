// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "openbaker/complex_matrix.hpp"
#include "openbaker/rational.hpp"
#include "openbaker/torus.hpp"

namespace openbaker {

/// Hilbert dimension N (= 1/(2 pi hbar)) and escape strip of an open quantum baker.
///
/// Position state j sits at q_j = (j + 1/2)/N, consistent with the
/// half-integer offsets of the antiperiodic Fourier kernel. State j is
/// removed when q_j falls in the half-open strip.
struct PropagatorSpec {
  int dimension = 2;
  OpeningSpec opening;

  static Rational position(int dimension, std::size_t j);

  /// Removed-state count M.
  std::size_t removed_count() const;
  std::vector<std::size_t> kept_indices() const;
  std::vector<std::size_t> removed_indices() const;
};

/// (G_N)_{jk} = exp(-2 pi i (j + 1/2)(k + 1/2)/N) / sqrt(N).
ComplexMatrix gn_matrix(int dimension);

/// Closed quantum baker B_N = G_N^{-1} blockdiag(G_{N/2}, G_{N/2}); N must be even.
ComplexMatrix baker_propagator(int dimension);

/// Diagonal 0/1 projector onto the states outside the strip.
ComplexMatrix opening_projector(const PropagatorSpec& spec);

/// B_N P: the closed propagator with the removed columns zeroed.
ComplexMatrix open_propagator(const PropagatorSpec& spec);

/// The (N - M) x (N - M) block of B_N on the kept states. Its spectrum plus
/// M zeros is the spectrum of B_N P.
ComplexMatrix kept_block(const PropagatorSpec& spec);

}  // namespace openbaker
