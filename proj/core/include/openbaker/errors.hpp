// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace openbaker {

/// Base class for all failures raised by the library. Invalid arguments
/// are reported with std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The exact survivor recursion would exceed its interval cap or the
/// integer width of its common denominator.
class ResolutionExhausted : public Error {
 public:
  using Error::Error;
};

/// Every initial condition escaped inside the requested time window.
class NoTrappedSet : public Error {
 public:
  using Error::Error;
};

/// The Hessenberg QR iteration ran out of its sweep budget.
class ConvergenceError : public Error {
 public:
  ConvergenceError(std::size_t dimension, std::size_t index)
      : Error("eigensolver did not converge: dimension " + std::to_string(dimension) +
              ", stalled at eigenvalue index " + std::to_string(index)),
        dimension_(dimension),
        index_(index) {}

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t dimension_;
  std::size_t index_;
};

/// A tail histogram has no mass to measure.
class EmptyTail : public Error {
 public:
  using Error::Error;
};

}  // namespace openbaker
