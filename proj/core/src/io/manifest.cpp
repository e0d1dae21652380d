// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#include "openbaker/io/manifest.hpp"

#include <chrono>

#include <fmt/chrono.h>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "openbaker/io/checksum.hpp"
#include "openbaker/io/csv.hpp"
#include "openbaker/version.hpp"

namespace openbaker::io {

std::string to_text(const Manifest& manifest) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : manifest.parameters) params[key] = value;
  nlohmann::ordered_json j;
  j["file"] = manifest.file;
  j["kind"] = manifest.kind;
  j["tool"] = "openbaker";
  j["tool_version"] = manifest.tool_version;
  j["parameters"] = std::move(params);
  j["sha256"] = manifest.sha256;
  if (manifest.created) j["created"] = *manifest.created;
  return j.dump(2) + "\n";
}

Manifest parse_manifest(std::string_view text) {
  const auto j = nlohmann::ordered_json::parse(text);
  Manifest m;
  m.file = j.at("file").get<std::string>();
  m.kind = j.at("kind").get<std::string>();
  m.tool_version = j.at("tool_version").get<std::string>();
  for (const auto& [key, value] : j.at("parameters").items()) m.parameters.emplace_back(key, value.get<std::string>());
  m.sha256 = j.at("sha256").get<std::string>();
  if (j.contains("created")) m.created = j.at("created").get<std::string>();
  return m;
}

std::filesystem::path manifest_path(const std::filesystem::path& file) {
  std::filesystem::path p = file;
  p += ".manifest.json";
  return p;
}

void write_with_manifest(const std::filesystem::path& path, std::string_view content, std::string kind,
                         Parameters parameters) {
  Manifest m;
  m.file = path.filename().string();
  m.kind = std::move(kind);
  m.tool_version = std::string(kVersion);
  m.parameters = std::move(parameters);
  m.sha256 = sha256_hex(content);
  write_file_atomic(path, content);
  write_file_atomic(manifest_path(path), to_text(m));
}

std::string utc_timestamp() {
  const auto now = std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
  return fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", now);
}

}  // namespace openbaker::io
