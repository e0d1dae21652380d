// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <filesystem>
#include <optional>
#include <string>

#include "openbaker/eigensolver.hpp"
#include "openbaker/resonance.hpp"

namespace openbaker::io {

/// Bumped whenever the position grid or the strip endpoint rule changes.
inline constexpr std::string_view kGridConvention = "grid-v1:q_j=(2j+1)/2N;strip=[qc-dq/2,qc+dq/2)";
/// Bumped whenever the eigensolver can produce different bits.
inline constexpr std::string_view kSolverVersion = "hqr-1";

/// On-disk store of spectra keyed by (N, q_c, dq, grid convention, solver
/// version). Payloads are spectrum CSVs with round-trip precision, so a hit
/// is bitwise identical to the run that filled it. Writes go through an
/// atomic rename; concurrent writers of the same key store identical bytes.
class SpectrumCache {
 public:
  explicit SpectrumCache(std::filesystem::path directory, SolverOptions options = {});

  static std::string key(const PropagatorSpec& spec);
  std::filesystem::path payload_path(const PropagatorSpec& spec) const;

  /// Entries with a bad checksum or a failed trace check count as misses.
  std::optional<ResonanceSet> load(const PropagatorSpec& spec) const;
  void store(const ResonanceSet& set) const;
  ResonanceSet get_or_compute(const PropagatorSpec& spec) const;

  std::size_t hits() const noexcept { return hits_; }
  std::size_t misses() const noexcept { return misses_; }
  std::size_t rejected() const noexcept { return rejected_; }

 private:
  std::filesystem::path directory_;
  SolverOptions options_;
  mutable std::atomic<std::size_t> hits_{0};
  mutable std::atomic<std::size_t> misses_{0};
  mutable std::atomic<std::size_t> rejected_{0};
};

}  // namespace openbaker::io
