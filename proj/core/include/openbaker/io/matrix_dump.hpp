// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "openbaker/complex_matrix.hpp"

namespace openbaker::io {

/// N as a little-endian int64, then 2 N^2 little-endian doubles: row-major,
/// real and imaginary parts interleaved.
std::string dump_matrix(const ComplexMatrix& m);
ComplexMatrix load_matrix(std::string_view bytes);

}  // namespace openbaker::io
