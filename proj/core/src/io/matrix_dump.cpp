// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#include "openbaker/io/matrix_dump.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace openbaker::io {
namespace {

template <typename T>
void put(std::string& out, T value) {
  const auto bits = std::bit_cast<std::uint64_t>(value);
  for (int shift = 0; shift < 64; shift += 8) out.push_back(static_cast<char>((bits >> shift) & 0xff));
}

template <typename T>
T get(std::string_view bytes, std::size_t& pos) {
  if (pos + 8 > bytes.size()) throw std::invalid_argument("matrix dump is truncated");
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= std::uint64_t{static_cast<unsigned char>(bytes[pos + i])} << (8 * i);
  pos += 8;
  return std::bit_cast<T>(bits);
}

}  // namespace

std::string dump_matrix(const ComplexMatrix& m) {
  const std::size_t n = m.dimension();
  std::string out;
  out.reserve(8 + 16 * n * n);
  put(out, static_cast<std::int64_t>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      put(out, m(r, c).real());
      put(out, m(r, c).imag());
    }
  }
  return out;
}

ComplexMatrix load_matrix(std::string_view bytes) {
  std::size_t pos = 0;
  const auto n = get<std::int64_t>(bytes, pos);
  if (n < 0 || static_cast<std::uint64_t>(n) > (bytes.size() - 8) / 16)
    throw std::invalid_argument("matrix dump has an invalid dimension");
  const auto dim = static_cast<std::size_t>(n);
  if (bytes.size() != 8 + 16 * dim * dim) throw std::invalid_argument("matrix dump has the wrong size");
  ComplexMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      const double re = get<double>(bytes, pos);
      const double im = get<double>(bytes, pos);
      m(r, c) = {re, im};
    }
  }
  return m;
}

}  // namespace openbaker::io
