// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "openbaker/rational.hpp"

namespace openbaker::cli {

struct GlobalOptions {
  std::filesystem::path out = "out";
  std::filesystem::path cache = ".openbaker-cache";
  std::size_t jobs = 1;
  std::uint64_t seed = 0;
};

struct ClassicalOptions {
  std::vector<std::string> widths = {"0.05", "0.1", "0.2"};
  std::string grid = "0:0.5:0.005";
  std::int64_t t = 9;
  std::vector<std::string> fit_centers;
  std::int64_t fit_t_min = 5;
  std::int64_t fit_t_max = 25;
  int raster = 0;
  std::vector<std::string> raster_centers = {"0.3", "0.5"};
  std::string raster_width = "0.05";
  std::int64_t raster_t = 10;
  std::string raster_mode = "both";
  std::uint64_t mc_samples = 0;
};

struct SpectrumOptions {
  int n = 602;
  std::string center = "0.3";
  std::string width = "0.1";
  bool scatter = false;
  bool dump_matrix = false;
};

struct StatsOptions {
  std::vector<int> dimensions = {602, 2048};
  std::vector<std::string> centers = {"0.3", "0.5"};
  std::string width = "0.1";
  double bin_width = 0.01;
  double lo = 0.7;
  double hi = 1.0;
  double tail = 0.7;
  int n_min = 500;
  int n_max = 2000;
  int step = 2;
  double gamma = 0.0;
  std::int64_t fit_t_min = 5;
  std::int64_t fit_t_max = 25;
};

struct WeylOptions {
  std::vector<int> dimensions = {128, 180, 256, 362, 512, 724, 1024};
  std::vector<std::string> centers = {"0.3", "0.5"};
  std::vector<std::string> widths = {"0.05", "0.1", "0.2"};
  double cut = 0.3;
  double reference = 0.0;
  std::string inject;
  std::string exponent = "4/5";
  std::uint64_t scale = 3;
};

/// Parses "lo:hi:step" into an exact inclusive grid.
std::vector<Rational> parse_grid(std::string_view text);
std::vector<Rational> parse_rationals(const std::vector<std::string>& values);
/// Rejects odd or non-positive dimensions.
void require_even(const std::vector<int>& dimensions);
/// File-name fragment such as "N602_qc0.3_dq0.1".
std::string tag(int dimension, const Rational& center, const Rational& width);
std::string tag(const Rational& center, const Rational& width);

}  // namespace openbaker::cli
