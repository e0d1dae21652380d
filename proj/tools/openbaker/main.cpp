// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#include <exception>
#include <functional>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "commands.hpp"
#include "openbaker/errors.hpp"
#include "openbaker/version.hpp"

using namespace openbaker::cli;

namespace {

void add_stats_common(CLI::App* cmd, StatsOptions& o, bool dimensions) {
  if (dimensions) cmd->add_option("--n", o.dimensions, "Even Hilbert dimensions")->delimiter(',');
  cmd->add_option("--qc", o.centers, "Opening centres")->delimiter(',');
  cmd->add_option("--dq", o.width, "Opening width");
  cmd->add_option("--bin", o.bin_width, "Modulus bin width")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classical and quantum open baker map: escape rates, resonance spectra, fractal Weyl law"};
  app.set_version_flag("--version", std::string(openbaker::kVersion));
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--out", global.out, "Output directory")->capture_default_str();
  app.add_option("--cache", global.cache, "Spectrum cache directory")->capture_default_str();
  app.add_option("--jobs", global.jobs, "Concurrent jobs")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--seed", global.seed, "Seed for Monte Carlo sampling")->capture_default_str();

  std::function<int()> action;

  ClassicalOptions classical;
  auto* c = app.add_subcommand("classical", "Forward-trapped area sweeps over q_c, escape-rate fits, rasters");
  c->add_option("--dq", classical.widths, "Opening widths")->delimiter(',')->capture_default_str();
  c->add_option("--grid", classical.grid, "q_c grid lo:hi:step")->capture_default_str();
  c->add_option("--t", classical.t, "Time of the sweep")->check(CLI::NonNegativeNumber)->capture_default_str();
  c->add_option("--fit-qc", classical.fit_centers, "Centres for A(t) series and escape-rate fits")->delimiter(',');
  c->add_option("--fit-tmin", classical.fit_t_min)->capture_default_str();
  c->add_option("--fit-tmax", classical.fit_t_max)->capture_default_str();
  c->add_option("--mc", classical.mc_samples, "Monte Carlo samples per fit centre (0 = off)");
  c->add_option("--raster", classical.raster, "Raster resolution (0 = no rasters)");
  c->add_option("--raster-qc", classical.raster_centers)->delimiter(',')->capture_default_str();
  c->add_option("--raster-dq", classical.raster_width)->capture_default_str();
  c->add_option("--raster-t", classical.raster_t)->capture_default_str();
  c->add_option("--raster-mode", classical.raster_mode)
      ->check(CLI::IsMember({"initial", "image", "both"}))
      ->capture_default_str();
  c->callback([&] { action = [&] { return run_classical(global, classical); }; });

  SpectrumOptions spectrum;
  auto* s = app.add_subcommand("spectrum", "Resonance spectrum of the open quantum baker map");
  s->add_option("--n", spectrum.n, "Even Hilbert dimension")->capture_default_str();
  s->add_option("--qc", spectrum.center)->capture_default_str();
  s->add_option("--dq", spectrum.width)->capture_default_str();
  s->add_flag("--scatter", spectrum.scatter, "Also emit re,im scatter data");
  s->add_flag("--dump-matrix", spectrum.dump_matrix, "Also dump the open propagator in binary");
  s->callback([&] { action = [&] { return run_spectrum(global, spectrum); }; });

  StatsOptions stats;
  auto* st = app.add_subcommand("stats", "Spectral statistics");
  st->require_subcommand(1);
  auto* cum = st->add_subcommand("cumulative", "Cumulative resonance count n(nu)");
  add_stats_common(cum, stats, true);
  cum->callback([&] { action = [&] { return run_cumulative(global, stats); }; });
  auto* hist = st->add_subcommand("histogram", "Modulus histogram W = dn/dnu");
  add_stats_common(hist, stats, true);
  hist->add_option("--lo", stats.lo)->capture_default_str();
  hist->add_option("--hi", stats.hi)->capture_default_str();
  hist->callback([&] { action = [&] { return run_histogram(global, stats); }; });
  auto* width = st->add_subcommand("width", "Half-height width of the tail histogram against N");
  add_stats_common(width, stats, false);
  width->add_option("--nmin", stats.n_min)->capture_default_str();
  width->add_option("--nmax", stats.n_max)->capture_default_str();
  width->add_option("--step", stats.step)->capture_default_str();
  width->add_option("--tail", stats.tail)->capture_default_str();
  width->callback([&] { action = [&] { return run_width(global, stats); }; });
  auto* resc = st->add_subcommand("rescaled", "Tail decay-rate histogram in units of the classical escape rate");
  add_stats_common(resc, stats, true);
  resc->add_option("--gamma", stats.gamma, "Classical escape rate (default: fitted)");
  resc->add_option("--tail", stats.tail)->capture_default_str();
  resc->callback([&] { action = [&] { return run_rescaled(global, stats); }; });

  WeylOptions weyl;
  auto* w = app.add_subcommand("weyl", "Fractal Weyl law counts and fit");
  w->add_option("--n", weyl.dimensions)->delimiter(',')->capture_default_str();
  w->add_option("--qc", weyl.centers)->delimiter(',')->capture_default_str();
  w->add_option("--dq", weyl.widths)->delimiter(',')->capture_default_str();
  w->add_option("--cut", weyl.cut)->capture_default_str();
  w->add_option("--reference", weyl.reference, "Reference d_I (default: classical fit)");
  w->add_option("--inject", weyl.inject, "Synthetic self-test")->check(CLI::IsMember({"power-law"}));
  w->add_option("--exponent", weyl.exponent)->capture_default_str();
  w->add_option("--scale", weyl.scale)->capture_default_str();
  w->callback([&] { action = [&] { return run_weyl(global, weyl); }; });

  int figure = 0;
  auto* r = app.add_subcommand("reproduce", "Regenerate the data behind one figure");
  r->add_option("--figure", figure)->required()->check(CLI::Range(1, 7));
  r->callback([&] { action = [&] { return run_reproduce(global, figure); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    return action();
  } catch (const std::invalid_argument& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  }
}
