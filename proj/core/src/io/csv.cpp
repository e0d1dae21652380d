// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#include "openbaker/io/csv.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <thread>

#include <fmt/format.h>

namespace openbaker::io {
namespace {

std::string format_number(double value, int digits) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return fmt::format("{:.{}g}", value, digits);
}

double parse_number(std::string_view field) {
  if (field == "inf") return std::numeric_limits<double>::infinity();
  if (field == "-inf") return -std::numeric_limits<double>::infinity();
  double value = 0.0;
  auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || end != field.data() + field.size())
    throw std::invalid_argument("malformed number in CSV: '" + std::string(field) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::string sweep_csv(std::span<const SweepPoint> points) {
  std::string out = fmt::format("{}\n", kSweepHeader);
  for (const SweepPoint& p : points) {
    out += fmt::format("{},{},{},{}\n", format_number(p.center.to_double(), 12),
                       format_number(p.width.to_double(), 12), p.t, format_number(p.area.to_double(), 12));
  }
  return out;
}

std::string series_csv(const SurvivalSeries& series) {
  std::string out = fmt::format("{}\n", kSeriesHeader);
  for (const SurvivalPoint& p : series.areas) out += fmt::format("{},{}\n", p.t, format_number(p.area.to_double(), 12));
  return out;
}

std::string spectrum_csv(const ResonanceSet& set, int digits) {
  std::string out = fmt::format("{}\n", kSpectrumHeader);
  auto z = set.eigenvalues();
  auto nu = set.moduli();
  auto gamma = set.decay_rates();
  for (std::size_t i = 0; i < set.size(); ++i) {
    out += fmt::format("{},{},{},{},{}\n", i, format_number(z[i].real(), digits), format_number(z[i].imag(), digits),
                       format_number(nu[i], digits), format_number(gamma[i], digits));
  }
  return out;
}

std::string cumulative_csv(const CumulativeCount& count) {
  std::string out = fmt::format("{}\n", kCumulativeHeader);
  for (const CumulativePoint& p : count.points())
    out += fmt::format("{},{}\n", format_number(p.nu, 15), format_number(p.n, 15));
  return out;
}

std::string histogram_csv(const ModulusHistogram& histogram) {
  std::string out = fmt::format("{}\n", kHistogramHeader);
  for (std::size_t k = 0; k < histogram.bins(); ++k)
    out += fmt::format("{},{}\n", format_number(histogram.edges[k], 12), format_number(histogram.density(k), 15));
  return out;
}

std::string width_csv(std::span<const WidthPoint> points) {
  std::string out = fmt::format("{}\n", kWidthHeader);
  for (const WidthPoint& p : points) {
    if (!p.ok()) continue;
    out += fmt::format("{},{},{}\n", p.dimension, format_number(p.center.to_double(), 12),
                       format_number(p.sigma, 12));
  }
  return out;
}

std::string rescaled_csv(const RescaledHistogram& histogram) {
  std::string out = fmt::format("{}\n", kRescaledHeader);
  for (const RescaledBin& b : histogram.bins)
    out += fmt::format("{},{}\n", format_number(b.center(), 15), format_number(b.density, 15));
  return out;
}

std::string weyl_csv(std::span<const WeylDataPoint> points) {
  std::string out = fmt::format("{}\n", kWeylHeader);
  for (const WeylDataPoint& p : points) {
    const double log_count = p.count > 0 ? std::log10(static_cast<double>(p.count))
                                         : -std::numeric_limits<double>::infinity();
    out += fmt::format("{},{},{},{}\n", p.dimension, p.count,
                       format_number(std::log10(static_cast<double>(p.dimension)), 15),
                       format_number(log_count, 15));
  }
  return out;
}

ResonanceSet parse_spectrum_csv(std::string_view text, const PropagatorSpec& spec) {
  std::vector<Complex> z;
  z.reserve(static_cast<std::size_t>(spec.dimension));
  bool header = true;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (header) {
      if (line != kSpectrumHeader) throw std::invalid_argument("spectrum CSV has wrong header: " + std::string(line));
      header = false;
      continue;
    }
    auto fields = split(line, ',');
    if (fields.size() != 5) throw std::invalid_argument("spectrum CSV row has wrong arity: " + std::string(line));
    z.emplace_back(parse_number(fields[1]), parse_number(fields[2]));
  }
  if (header) throw std::invalid_argument("spectrum CSV is empty");
  return ResonanceSet(spec, std::move(z));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  static std::atomic<unsigned long> counter{0};
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ostringstream suffix;
  suffix << ".tmp." << std::this_thread::get_id() << '.' << counter.fetch_add(1);
  std::filesystem::path tmp = path;
  tmp += suffix.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace openbaker::io
