// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#include "openbaker/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace openbaker {

ComplexMatrix::ComplexMatrix(std::size_t dimension) : n_(dimension), data_(dimension * dimension) {}

ComplexMatrix ComplexMatrix::identity(std::size_t dimension) {
  ComplexMatrix m(dimension);
  for (std::size_t i = 0; i < dimension; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(n_);
  for (std::size_t c = 0; c < n_; ++c) {
    for (std::size_t r = 0; r < n_; ++r) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

Complex ComplexMatrix::trace() const noexcept {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < n_; ++i) sum += (*this)(i, i);
  return sum;
}

bool ComplexMatrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix product: dimension mismatch");
  const std::size_t n = a.n_;
  ComplexMatrix out(n);
  for (std::size_t c = 0; c < n; ++c) {
    Complex* dst = out.data() + c * n;
    for (std::size_t k = 0; k < n; ++k) {
      const Complex scale = b(k, c);
      if (scale == Complex(0.0)) continue;
      const Complex* src = a.data() + k * n;
      for (std::size_t r = 0; r < n; ++r) dst[r] += src[r] * scale;
    }
  }
  return out;
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("max_abs_difference: dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dimension() * a.dimension(); ++i) {
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  }
  return worst;
}

double unitarity_defect(const ComplexMatrix& m) {
  return max_abs_difference(m * m.adjoint(), ComplexMatrix::identity(m.dimension()));
}

double max_abs_entry(const ComplexMatrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.dimension() * m.dimension(); ++i) worst = std::max(worst, std::abs(m.data()[i]));
  return worst;
}

}  // namespace openbaker
