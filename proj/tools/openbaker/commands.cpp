// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "openbaker/io/cache.hpp"
#include "openbaker/io/checksum.hpp"
#include "openbaker/io/csv.hpp"
#include "openbaker/io/manifest.hpp"
#include "openbaker/io/matrix_dump.hpp"
#include "openbaker/io/raster.hpp"
#include "openbaker/parallel.hpp"
#include "openbaker/propagator.hpp"
#include "openbaker/statistics.hpp"
#include "openbaker/trapped_set.hpp"

namespace openbaker::cli {
namespace {

using io::Parameters;
using Json = nlohmann::ordered_json;

std::string num(double value) { return fmt::format("{:.15g}", value); }

void emit(const GlobalOptions& global, const std::string& name, const std::string& content, std::string kind,
          Parameters parameters) {
  const auto path = global.out / name;
  io::write_with_manifest(path, content, std::move(kind), std::move(parameters));
  fmt::print("wrote {}  sha256={}\n", path.string(), io::sha256_hex(content).substr(0, 16));
}

Parameters spec_parameters(int dimension, const Rational& center, const Rational& width) {
  return {{"N", std::to_string(dimension)}, {"q_c", center.to_string()}, {"delta_q", width.to_string()}};
}

/// Spectra for every (N, q_c) pair, dimensions-major, through the cache.
std::vector<ResonanceSet> spectra(const GlobalOptions& global, const std::vector<int>& dimensions,
                                  const std::vector<Rational>& centers, const Rational& width) {
  require_even(dimensions);
  io::SpectrumCache cache(global.cache);
  std::vector<ResonanceSet> out(dimensions.size() * centers.size());
  parallel_for(out.size(), global.jobs, [&](std::size_t idx) {
    out[idx] = cache.get_or_compute(
        PropagatorSpec{dimensions[idx / centers.size()], OpeningSpec(centers[idx % centers.size()], width)});
  });
  fmt::print("spectrum cache: {} hits, {} computed\n", cache.hits(), cache.misses());
  return out;
}

double escape_rate_for(const Rational& center, const Rational& width, std::int64_t t_min, std::int64_t t_max) {
  return classical_escape_rate(OpeningSpec(center, width), t_min, t_max).gamma_cl;
}

}  // namespace

int run_classical(const GlobalOptions& global, const ClassicalOptions& options) {
  const std::vector<Rational> widths = parse_rationals(options.widths);
  const std::vector<Rational> centers = parse_grid(options.grid);
  const std::vector<Rational> fit_centers = parse_rationals(options.fit_centers);

  for (const Rational& width : widths) {
    const auto sweep = qc_sweep(width, centers, options.t, {}, global.jobs);
    emit(global, fmt::format("classical_dq{}.csv", width.to_decimal_string()), io::sweep_csv(sweep),
         "classical-sweep",
         {{"delta_q", width.to_string()}, {"grid", options.grid}, {"t", std::to_string(options.t)}});
  }

  if (!fit_centers.empty()) {
    Json fits = Json::array();
    for (const Rational& width : widths) {
      for (const Rational& center : fit_centers) {
        const OpeningSpec opening(center, width);
        const SurvivalSeries series = area_series(opening, options.fit_t_max);
        const EscapeRateFit fit = escape_rate(series, options.fit_t_min, options.fit_t_max);
        emit(global, fmt::format("series_{}.csv", tag(center, width)), io::series_csv(series), "survival-series",
             {{"q_c", center.to_string()}, {"delta_q", width.to_string()},
              {"t_max", std::to_string(options.fit_t_max)}});
        fits.push_back({{"q_c", center.to_decimal_string()},
                        {"delta_q", width.to_decimal_string()},
                        {"t_min", fit.t_min},
                        {"t_max", fit.t_max},
                        {"gamma_cl", fit.gamma_cl},
                        {"information_dimension", fit.information_dimension},
                        {"residual", fit.residual}});
        fmt::print("q_c={} dq={}: gamma_cl={:.6f} d_I={:.6f}\n", center.to_decimal_string(),
                   width.to_decimal_string(), fit.gamma_cl, fit.information_dimension);
      }
    }
    emit(global, "escape_rates.json", fits.dump(2) + "\n", "escape-rate-fits",
         {{"t_min", std::to_string(options.fit_t_min)}, {"t_max", std::to_string(options.fit_t_max)}});
  }

  if (options.mc_samples > 0) {
    if (fit_centers.empty()) throw std::invalid_argument("--mc needs --fit-qc to choose the checked centres");
    std::string csv = "q_c,delta_q,t,exact,estimate,std_error\n";
    for (const Rational& width : widths) {
      for (const Rational& center : fit_centers) {
        const OpeningSpec opening(center, width);
        const double exact = survivor_set(opening, options.t).measure().to_double();
        const auto mc = monte_carlo_area(opening, options.t, options.mc_samples, global.seed, global.jobs);
        csv += fmt::format("{},{},{},{},{},{}\n", center.to_decimal_string(), width.to_decimal_string(), options.t,
                           num(exact), num(mc.estimate), num(mc.std_error));
      }
    }
    emit(global, "monte_carlo.csv", csv, "monte-carlo-check",
         {{"samples", std::to_string(options.mc_samples)}, {"seed", std::to_string(global.seed)},
          {"t", std::to_string(options.t)}});
  }

  if (options.raster > 0) {
    std::vector<std::pair<std::string, RasterMode>> modes;
    if (options.raster_mode == "initial" || options.raster_mode == "both") modes.emplace_back("initial", RasterMode::initial);
    if (options.raster_mode == "image" || options.raster_mode == "both") modes.emplace_back("image", RasterMode::image);
    if (modes.empty()) throw std::invalid_argument("--raster-mode must be initial, image or both");
    const Rational width = Rational::from_decimal(options.raster_width);
    for (const Rational& center : parse_rationals(options.raster_centers)) {
      for (const auto& [name, mode] : modes) {
        const TrappedRaster raster = render_trapped_set(OpeningSpec(center, width), options.raster_t, options.raster, mode);
        emit(global, fmt::format("trapped_{}_t{}_{}.pgm", name, options.raster_t, tag(center, width)), io::pgm(raster),
             "trapped-set-raster",
             {{"q_c", center.to_string()}, {"delta_q", width.to_string()}, {"t", std::to_string(options.raster_t)},
              {"resolution", std::to_string(options.raster)}, {"mode", name}});
      }
    }
  }
  return 0;
}

int run_spectrum(const GlobalOptions& global, const SpectrumOptions& options) {
  require_even({options.n});
  const Rational center = Rational::from_decimal(options.center);
  const Rational width = Rational::from_decimal(options.width);
  const PropagatorSpec spec{options.n, OpeningSpec(center, width)};
  io::SpectrumCache cache(global.cache);
  const ResonanceSet set = cache.get_or_compute(spec);
  fmt::print("N={} q_c={} dq={}: {} (max modulus {:.12f}, trace defect {:.3g})\n", options.n,
             center.to_decimal_string(), width.to_decimal_string(), cache.hits() ? "cache hit" : "computed",
             set.max_modulus(), trace_defect(set));
  const std::string label = tag(options.n, center, width);
  emit(global, fmt::format("spectrum_{}.csv", label), io::spectrum_csv(set), "spectrum",
       spec_parameters(options.n, center, width));
  if (options.scatter) {
    std::string csv = "re,im\n";
    for (const Complex& z : set.eigenvalues()) csv += fmt::format("{},{}\n", num(z.real()), num(z.imag()));
    emit(global, fmt::format("scatter_{}.csv", label), csv, "complex-plane-scatter",
         spec_parameters(options.n, center, width));
  }
  if (options.dump_matrix) {
    emit(global, fmt::format("propagator_{}.bin", label), io::dump_matrix(open_propagator(spec)), "matrix-dump",
         spec_parameters(options.n, center, width));
  }
  return 0;
}

int run_cumulative(const GlobalOptions& global, const StatsOptions& options) {
  const auto centers = parse_rationals(options.centers);
  const Rational width = Rational::from_decimal(options.width);
  const auto sets = spectra(global, options.dimensions, centers, width);
  for (const ResonanceSet& set : sets) {
    const auto& spec = set.spec();
    emit(global, fmt::format("cumulative_{}.csv", tag(spec.dimension, spec.opening.center(), width)),
         io::cumulative_csv(cumulative_count(set)), "cumulative-count",
         spec_parameters(spec.dimension, spec.opening.center(), width));
  }
  return 0;
}

int run_histogram(const GlobalOptions& global, const StatsOptions& options) {
  const auto centers = parse_rationals(options.centers);
  const Rational width = Rational::from_decimal(options.width);
  const auto sets = spectra(global, options.dimensions, centers, width);
  for (const ResonanceSet& set : sets) {
    const auto& spec = set.spec();
    Parameters params = spec_parameters(spec.dimension, spec.opening.center(), width);
    params.insert(params.end(), {{"bin_width", num(options.bin_width)}, {"lo", num(options.lo)}, {"hi", num(options.hi)}});
    emit(global, fmt::format("histogram_{}.csv", tag(spec.dimension, spec.opening.center(), width)),
         io::histogram_csv(modulus_histogram(set, options.bin_width, options.lo, options.hi)), "modulus-histogram",
         std::move(params));
  }
  return 0;
}

int run_width(const GlobalOptions& global, const StatsOptions& options) {
  if (options.step <= 0 || options.n_min > options.n_max) throw std::invalid_argument("invalid N range");
  std::vector<int> dimensions;
  for (int n = options.n_min; n <= options.n_max; n += options.step) dimensions.push_back(n);
  require_even(dimensions);
  const auto centers = parse_rationals(options.centers);
  const Rational width = Rational::from_decimal(options.width);
  io::SpectrumCache cache(global.cache);
  const auto points = width_sweep(
      dimensions, centers, width, [&cache](const PropagatorSpec& spec) { return cache.get_or_compute(spec); },
      global.jobs, options.bin_width, options.tail);
  std::size_t failures = 0;
  for (const WidthPoint& p : points) {
    if (p.ok()) continue;
    ++failures;
    fmt::print(stderr, "width: N={} q_c={} failed: {}\n", p.dimension, p.center.to_decimal_string(), p.error);
  }
  fmt::print("spectrum cache: {} hits, {} computed; {} failed points\n", cache.hits(), cache.misses(), failures);
  emit(global, fmt::format("width_dq{}.csv", width.to_decimal_string()), io::width_csv(points), "width-sweep",
       {{"delta_q", width.to_string()},
        {"n_min", std::to_string(options.n_min)},
        {"n_max", std::to_string(options.n_max)},
        {"step", std::to_string(options.step)},
        {"bin_width", num(options.bin_width)},
        {"tail", num(options.tail)},
        {"failed_points", std::to_string(failures)}});
  return 0;
}

int run_rescaled(const GlobalOptions& global, const StatsOptions& options) {
  const auto centers = parse_rationals(options.centers);
  const Rational width = Rational::from_decimal(options.width);
  const auto sets = spectra(global, options.dimensions, centers, width);
  for (const ResonanceSet& set : sets) {
    const auto& spec = set.spec();
    const double gamma = options.gamma > 0.0
                             ? options.gamma
                             : escape_rate_for(spec.opening.center(), width, options.fit_t_min, options.fit_t_max);
    const RescaledHistogram h = rescaled_decay_histogram(set, gamma, options.bin_width, options.tail);
    fmt::print("N={} q_c={}: gamma_cl={:.6f}, peak at Gamma/gamma_cl={:.4f}\n", spec.dimension,
               spec.opening.center().to_decimal_string(), gamma, h.peak().center());
    Parameters params = spec_parameters(spec.dimension, spec.opening.center(), width);
    params.insert(params.end(), {{"gamma_cl", num(gamma)}, {"bin_width", num(options.bin_width)}, {"tail", num(options.tail)}});
    emit(global, fmt::format("rescaled_{}.csv", tag(spec.dimension, spec.opening.center(), width)),
         io::rescaled_csv(h), "rescaled-decay-histogram", std::move(params));
  }
  return 0;
}

namespace {

Json fit_json(const WeylFit& fit, double reference_dimension) {
  return {{"slope", fit.slope},
          {"intercept", fit.intercept},
          {"reference_dimension", reference_dimension},
          {"reference_slope", fit.reference_slope},
          {"slope_deviation", fit.slope_deviation()},
          {"residual", fit.residual}};
}

int run_injected(const GlobalOptions& global, const WeylOptions& options) {
  if (options.inject != "power-law") throw std::invalid_argument("--inject supports only power-law");
  const Rational exponent = Rational::from_decimal(options.exponent);
  const auto p = static_cast<int>(exponent.numerator());
  const auto q = static_cast<int>(exponent.denominator());
  if (exponent <= Rational(0) || exponent > Rational(1) || 5 * q > 30)
    throw std::invalid_argument("--exponent must be a fraction p/q in (0, 1] with q <= 6");
  std::vector<WeylDataPoint> points;
  for (int i = 2; i <= 5; ++i) {
    points.push_back({1 << (q * i), options.scale << (p * i), options.cut});
  }
  const WeylFit fit = weyl_fit(points, 1.0 + exponent.to_double());
  const bool exact = std::abs(fit.slope - exponent.to_double()) <= 1e-12 &&
                     std::abs(fit.intercept - std::log10(static_cast<double>(options.scale))) <= 1e-12;
  fmt::print("injected power law N^{}: fitted slope {:.15g}, intercept {:.15g} ({})\n", exponent.to_decimal_string(),
             fit.slope, fit.intercept, exact ? "recovered" : "NOT recovered");
  emit(global, "weyl_injected.csv", io::weyl_csv(points), "weyl-injected",
       {{"exponent", exponent.to_string()}, {"scale", std::to_string(options.scale)}});
  emit(global, "weyl_injected_fit.json", fit_json(fit, 1.0 + exponent.to_double()).dump(2) + "\n", "weyl-fit",
       {{"exponent", exponent.to_string()}, {"scale", std::to_string(options.scale)}});
  return exact ? 0 : 1;
}

}  // namespace

int run_weyl(const GlobalOptions& global, const WeylOptions& options) {
  if (!options.inject.empty()) return run_injected(global, options);
  if (options.dimensions.size() < 4) throw std::invalid_argument("weyl needs at least four dimensions");
  const auto centers = parse_rationals(options.centers);
  int status = 0;
  for (const Rational& width : parse_rationals(options.widths)) {
    const auto sets = spectra(global, options.dimensions, centers, width);
    for (std::size_t c = 0; c < centers.size(); ++c) {
      std::vector<WeylDataPoint> points;
      for (std::size_t d = 0; d < options.dimensions.size(); ++d)
        points.push_back(weyl_count(sets[d * centers.size() + c], options.cut));
      const std::string label = tag(centers[c], width);
      Parameters params = {{"q_c", centers[c].to_string()}, {"delta_q", width.to_string()}, {"nu_cut", num(options.cut)}};
      emit(global, fmt::format("weyl_{}.csv", label), io::weyl_csv(points), "weyl-counts", params);
      if (std::any_of(points.begin(), points.end(), [](const WeylDataPoint& p) { return p.count == 0; })) {
        fmt::print(stderr, "weyl: q_c={} dq={} has a zero count; no fit\n", centers[c].to_decimal_string(),
                   width.to_decimal_string());
        status = 1;
        continue;
      }
      const double reference = options.reference > 0.0
                                   ? options.reference
                                   : classical_escape_rate(OpeningSpec(centers[c], width)).information_dimension;
      const WeylFit fit = weyl_fit(points, reference);
      fmt::print("q_c={} dq={}: slope {:.4f}, reference d_I - 1 = {:.4f}, deviation {:+.4f}\n",
                 centers[c].to_decimal_string(), width.to_decimal_string(), fit.slope, fit.reference_slope,
                 fit.slope_deviation());
      emit(global, fmt::format("weyl_fit_{}.json", label), fit_json(fit, reference).dump(2) + "\n", "weyl-fit",
           std::move(params));
    }
  }
  return status;
}

int run_reproduce(const GlobalOptions& global, int figure) {
  switch (figure) {
    case 1: {
      ClassicalOptions o;
      o.grid = "0:1:0.005";
      o.fit_centers = {"0.3", "0.5"};
      o.raster = 729;
      return run_classical(global, o);
    }
    case 2: {
      for (int n : {602, 2048}) {
        for (const char* qc : {"0.3", "0.5"}) {
          SpectrumOptions o;
          o.n = n;
          o.center = qc;
          o.scatter = true;
          if (int rc = run_spectrum(global, o)) return rc;
        }
      }
      return 0;
    }
    case 3:
      return run_cumulative(global, StatsOptions{});
    case 4: {
      StatsOptions o;
      o.dimensions = {602, 1782, 2048};
      return run_histogram(global, o);
    }
    case 5:
      return run_width(global, StatsOptions{});
    case 6: {
      StatsOptions o;
      o.dimensions = {602, 1782, 2048};
      return run_rescaled(global, o);
    }
    case 7:
      return run_weyl(global, WeylOptions{});
    default:
      throw std::invalid_argument(fmt::format("no figure {}; choose 1 to 7", figure));
  }
}

}  // namespace openbaker::cli
