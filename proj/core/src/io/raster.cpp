// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#include "openbaker/io/raster.hpp"

#include <fmt/format.h>

namespace openbaker::io {

std::string pgm(const TrappedRaster& raster) {
  std::string out = fmt::format("P5\n{} {}\n255\n", raster.resolution, raster.resolution);
  out.reserve(out.size() + raster.trapped.size());
  for (std::uint8_t cell : raster.trapped) out.push_back(cell ? '\0' : '\xff');
  return out;
}

}  // namespace openbaker::io
