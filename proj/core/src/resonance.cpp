// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#include "openbaker/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "openbaker/errors.hpp"

namespace openbaker {

double decay_rate(double modulus) noexcept {
  if (modulus == 0.0) return std::numeric_limits<double>::infinity();
  return -2.0 * std::log(modulus);
}

ResonanceSet::ResonanceSet(PropagatorSpec spec, std::vector<Complex> eigenvalues) : spec_(std::move(spec)) {
  if (eigenvalues.size() != static_cast<std::size_t>(spec_.dimension)) {
    throw std::invalid_argument("ResonanceSet: expected " + std::to_string(spec_.dimension) + " eigenvalues, got " +
                                std::to_string(eigenvalues.size()));
  }
  std::vector<double> mod(eigenvalues.size());
  std::vector<double> phase(eigenvalues.size());
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    mod[i] = std::abs(eigenvalues[i]);
    phase[i] = std::arg(eigenvalues[i]);
  }
  std::vector<std::size_t> order(eigenvalues.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (mod[a] != mod[b]) return mod[a] > mod[b];
    if (phase[a] != phase[b]) return phase[a] < phase[b];
    return false;
  });
  eigenvalues_.reserve(order.size());
  moduli_.reserve(order.size());
  decay_rates_.reserve(order.size());
  for (std::size_t idx : order) {
    eigenvalues_.push_back(eigenvalues[idx]);
    moduli_.push_back(mod[idx]);
    decay_rates_.push_back(decay_rate(mod[idx]));
  }
}

Complex ResonanceSet::eigenvalue_sum() const noexcept {
  Complex sum = 0.0;
  for (const Complex& z : eigenvalues_) sum += z;
  return sum;
}

std::size_t ResonanceSet::count_below(double nu) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(moduli_.begin(), moduli_.end(), [nu](double m) { return m < nu; }));
}

double trace_defect(const ResonanceSet& set) {
  const Complex trace = open_propagator(set.spec()).trace();
  return std::abs(set.eigenvalue_sum() - trace);
}

ResonanceSet resonance_set(const PropagatorSpec& spec, const SolverOptions& options) {
  ComplexMatrix block = kept_block(spec);
  const Complex block_trace = block.trace();
  std::vector<Complex> z = eigenvalues(std::move(block), options);
  z.resize(static_cast<std::size_t>(spec.dimension), Complex(0.0));
  ResonanceSet set(spec, std::move(z));
  const double defect = std::abs(set.eigenvalue_sum() - block_trace);
  if (defect > kContractionTolerance * spec.dimension) {
    throw Error("resonance_set: eigenvalue sum misses the trace by " + std::to_string(defect));
  }
  return set;
}

}  // namespace openbaker
