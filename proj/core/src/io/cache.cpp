// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#include "openbaker/io/cache.hpp"

#include <fmt/format.h>

#include "openbaker/io/checksum.hpp"
#include "openbaker/io/csv.hpp"
#include "openbaker/io/manifest.hpp"
#include "openbaker/version.hpp"

namespace openbaker::io {

SpectrumCache::SpectrumCache(std::filesystem::path directory, SolverOptions options)
    : directory_(std::move(directory)), options_(options) {}

std::string SpectrumCache::key(const PropagatorSpec& spec) {
  return sha256_hex(fmt::format("N={};q_c={};dq={};grid={};solver={}", spec.dimension,
                                spec.opening.center().to_string(), spec.opening.width().to_string(),
                                kGridConvention, kSolverVersion));
}

std::filesystem::path SpectrumCache::payload_path(const PropagatorSpec& spec) const {
  const std::string k = key(spec);
  return directory_ / k.substr(0, 2) / (k + ".csv");
}

std::optional<ResonanceSet> SpectrumCache::load(const PropagatorSpec& spec) const {
  const auto path = payload_path(spec);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec) || !std::filesystem::exists(manifest_path(path), ec)) return std::nullopt;
  try {
    const std::string payload = read_file(path);
    const Manifest manifest = parse_manifest(read_file(manifest_path(path)));
    if (manifest.sha256 != sha256_hex(payload)) {
      ++rejected_;
      return std::nullopt;
    }
    ResonanceSet set = parse_spectrum_csv(payload, spec);
    if (!(trace_defect(set) <= kContractionTolerance * spec.dimension)) {
      ++rejected_;
      return std::nullopt;
    }
    return set;
  } catch (const std::exception&) {
    ++rejected_;
    return std::nullopt;
  }
}

void SpectrumCache::store(const ResonanceSet& set) const {
  const PropagatorSpec& spec = set.spec();
  const auto path = payload_path(spec);
  const std::string payload = spectrum_csv(set, kRoundTripDigits);
  Manifest m;
  m.file = path.filename().string();
  m.kind = "spectrum-cache";
  m.tool_version = std::string(kVersion);
  m.parameters = {{"N", std::to_string(spec.dimension)},
                  {"q_c", spec.opening.center().to_string()},
                  {"delta_q", spec.opening.width().to_string()},
                  {"grid_convention", std::string(kGridConvention)},
                  {"solver_version", std::string(kSolverVersion)}};
  m.sha256 = sha256_hex(payload);
  m.created = utc_timestamp();
  write_file_atomic(path, payload);
  write_file_atomic(manifest_path(path), to_text(m));
}

ResonanceSet SpectrumCache::get_or_compute(const PropagatorSpec& spec) const {
  if (auto cached = load(spec)) {
    ++hits_;
    return *std::move(cached);
  }
  ++misses_;
  ResonanceSet set = resonance_set(spec, options_);
  store(set);
  return parse_spectrum_csv(spectrum_csv(set, kRoundTripDigits), spec);
}

}  // namespace openbaker::io
