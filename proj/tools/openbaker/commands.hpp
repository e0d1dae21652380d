// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "options.hpp"

namespace openbaker::cli {

int run_classical(const GlobalOptions& global, const ClassicalOptions& options);
int run_spectrum(const GlobalOptions& global, const SpectrumOptions& options);
int run_cumulative(const GlobalOptions& global, const StatsOptions& options);
int run_histogram(const GlobalOptions& global, const StatsOptions& options);
int run_width(const GlobalOptions& global, const StatsOptions& options);
int run_rescaled(const GlobalOptions& global, const StatsOptions& options);
int run_weyl(const GlobalOptions& global, const WeylOptions& options);
/// Runs the documented invocation behind figure 1 to 7.
int run_reproduce(const GlobalOptions& global, int figure);

}  // namespace openbaker::cli
