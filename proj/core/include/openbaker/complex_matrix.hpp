// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace openbaker {

using Complex = std::complex<double>;

/// Dense square complex matrix, column-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dimension);

  static ComplexMatrix identity(std::size_t dimension);

  std::size_t dimension() const noexcept { return n_; }

  Complex& operator()(std::size_t row, std::size_t col) noexcept { return data_[col * n_ + row]; }
  const Complex& operator()(std::size_t row, std::size_t col) const noexcept { return data_[col * n_ + row]; }

  std::span<Complex> column(std::size_t col) noexcept { return {data_.data() + col * n_, n_}; }
  std::span<const Complex> column(std::size_t col) const noexcept { return {data_.data() + col * n_, n_}; }

  Complex* data() noexcept { return data_.data(); }
  const Complex* data() const noexcept { return data_.data(); }

  ComplexMatrix adjoint() const;
  Complex trace() const noexcept;
  bool all_finite() const noexcept;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

/// Largest |entry| of a - b.
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest |entry| of M M^dagger - I.
double unitarity_defect(const ComplexMatrix& m);

/// Largest |entry|.
double max_abs_entry(const ComplexMatrix& m);

}  // namespace openbaker
