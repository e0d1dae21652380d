// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "openbaker/trapped_set.hpp"

namespace openbaker::io {

/// Binary PGM (P5): trapped cells 0, escaped cells 255.
std::string pgm(const TrappedRaster& raster);

}  // namespace openbaker::io
