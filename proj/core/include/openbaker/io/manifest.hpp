// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace openbaker::io {

using Parameters = std::vector<std::pair<std::string, std::string>>;

/// Provenance record stored next to every produced file as
/// `<file>.manifest.json`.
struct Manifest {
  std::string file;
  std::string kind;
  std::string tool_version;
  Parameters parameters;
  std::string sha256;
  /// Only cache entries carry a timestamp, so output manifests stay
  /// byte-identical between runs.
  std::optional<std::string> created;
};

std::string to_text(const Manifest& manifest);
Manifest parse_manifest(std::string_view text);

std::filesystem::path manifest_path(const std::filesystem::path& file);

/// Writes `content` to `path` and its manifest beside it.
void write_with_manifest(const std::filesystem::path& path, std::string_view content, std::string kind,
                         Parameters parameters);

/// UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

}  // namespace openbaker::io
