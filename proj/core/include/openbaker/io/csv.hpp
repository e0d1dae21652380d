// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "openbaker/resonance.hpp"
#include "openbaker/statistics.hpp"
#include "openbaker/trapped_set.hpp"

namespace openbaker::io {

inline constexpr std::string_view kSweepHeader = "q_c,delta_q,t,area";
inline constexpr std::string_view kSeriesHeader = "t,area";
inline constexpr std::string_view kSpectrumHeader = "index,re,im,modulus,gamma";
inline constexpr std::string_view kCumulativeHeader = "nu,n";
inline constexpr std::string_view kHistogramHeader = "nu_bin_left,W";
inline constexpr std::string_view kWidthHeader = "N,q_c,sigma";
inline constexpr std::string_view kRescaledHeader = "gamma_over_gamma_cl,W";
inline constexpr std::string_view kWeylHeader = "N,count,log10N,log10count";

/// Significant digits of the user-facing spectrum CSV.
inline constexpr int kSpectrumDigits = 15;
/// Enough digits to round-trip every double.
inline constexpr int kRoundTripDigits = 17;

std::string sweep_csv(std::span<const SweepPoint> points);
std::string series_csv(const SurvivalSeries& series);
std::string spectrum_csv(const ResonanceSet& set, int digits = kSpectrumDigits);
std::string cumulative_csv(const CumulativeCount& count);
std::string histogram_csv(const ModulusHistogram& histogram);
/// Failed points are skipped.
std::string width_csv(std::span<const WidthPoint> points);
std::string rescaled_csv(const RescaledHistogram& histogram);
std::string weyl_csv(std::span<const WeylDataPoint> points);

/// Reads a spectrum CSV back. The row count must equal spec.dimension.
ResonanceSet parse_spectrum_csv(std::string_view text, const PropagatorSpec& spec);

std::string read_file(const std::filesystem::path& path);
/// Writes through a temporary sibling and renames it into place, creating
/// parent directories as needed.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace openbaker::io
