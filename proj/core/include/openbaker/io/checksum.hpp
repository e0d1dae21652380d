// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

namespace openbaker::io {

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

}  // namespace openbaker::io
