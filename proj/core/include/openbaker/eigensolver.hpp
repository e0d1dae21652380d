// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "openbaker/complex_matrix.hpp"

namespace openbaker {

struct SolverOptions {
  /// Matrices above this dimension are rejected.
  std::size_t max_dimension = 4096;
  /// Total QR sweep budget is sweeps_per_dimension * N.
  std::size_t sweeps_per_dimension = 30;
  /// An exceptional shift replaces the Wilkinson shift after this many
  /// sweeps without a deflation.
  std::size_t exceptional_shift_period = 10;
};

/// Unitary similarity to upper Hessenberg form by Householder reflectors.
/// Entries below the first subdiagonal are set to zero.
void reduce_to_hessenberg(ComplexMatrix& a);

/// All N eigenvalues (with multiplicity) of a dense complex matrix.
///
/// Hessenberg reduction followed by implicitly shifted single-shift QR with
/// Wilkinson shifts; no eigenvectors are formed. Output order is the order of deflation (bottom-up position on
/// the diagonal), which is deterministic for a given input.
///
/// Throws ConvergenceError when the sweep budget runs out and
/// std::invalid_argument for non-finite input or oversize matrices.
std::vector<Complex> eigenvalues(ComplexMatrix a, const SolverOptions& options = {});

}  // namespace openbaker
