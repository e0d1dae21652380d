// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite. Each criterion prints its evidence followed by one
// "[PASS]" or "[FAIL]" line; the exit status is nonzero if any selected
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "charpoly_oracle.hpp"
#include "openbaker/eigensolver.hpp"
#include "openbaker/io/cache.hpp"
#include "openbaker/io/csv.hpp"
#include "openbaker/propagator.hpp"
#include "openbaker/resonance.hpp"
#include "openbaker/statistics.hpp"
#include "openbaker/trapped_set.hpp"

namespace {

using namespace openbaker;

struct Context {
  std::filesystem::path cache_dir;
  std::size_t jobs = 1;

  ResonanceSet spectrum(int n, const Rational& centre, const Rational& width) const {
    return io::SpectrumCache(cache_dir).get_or_compute(PropagatorSpec{n, OpeningSpec(centre, width)});
  }
};

Rational dec(const char* text) { return Rational::from_decimal(text); }

bool within(double value, double target, double tolerance) { return std::abs(value - target) <= tolerance; }

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

bool criterion_escape_rates(const Context&) {
  const EscapeRateFit a = classical_escape_rate(OpeningSpec(dec("0.3"), dec("0.1")), 5, 25);
  const EscapeRateFit b = classical_escape_rate(OpeningSpec(dec("0.5"), dec("0.1")), 5, 25);
  fmt::print("  q_c=0.3: gamma_cl = {:.6f} (target 0.09073 +- 0.002)\n", a.gamma_cl);
  fmt::print("  q_c=0.5: gamma_cl = {:.6f} (target 0.16488 +- 0.002)\n", b.gamma_cl);
  return within(a.gamma_cl, 0.09073, 0.002) && within(b.gamma_cl, 0.16488, 0.002);
}

bool criterion_information_dimensions(const Context&) {
  const EscapeRateFit a = classical_escape_rate(OpeningSpec(dec("0.3"), dec("0.1")), 5, 25);
  const EscapeRateFit b = classical_escape_rate(OpeningSpec(dec("0.5"), dec("0.1")), 5, 25);
  fmt::print("  q_c=0.3: d_I = {:.6f} (target 1.86910 +- 0.005)\n", a.information_dimension);
  fmt::print("  q_c=0.5: d_I = {:.6f} (target 1.76213 +- 0.005)\n", b.information_dimension);
  const bool identity = a.information_dimension + a.gamma_cl / std::log(2.0) == 2.0 &&
                        b.information_dimension + b.gamma_cl / std::log(2.0) == 2.0;
  return identity && within(a.information_dimension, 1.86910, 0.005) &&
         within(b.information_dimension, 1.76213, 0.005);
}

bool criterion_sweep_shape(const Context& ctx) {
  const auto grid = rational_grid(Rational(0), Rational(1), Rational(1, 200));
  bool all = true;
  for (const char* w : {"0.05", "0.1", "0.2"}) {
    const auto sweep = qc_sweep(dec(w), grid, 9, {}, ctx.jobs);
    const std::size_t n = sweep.size();
    bool symmetric = true;
    for (std::size_t i = 0; i < n; ++i) symmetric = symmetric && sweep[i].area == sweep[n - 1 - i].area;
    std::size_t arg_min = 0;
    std::size_t arg_max = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (sweep[i].area < sweep[arg_min].area) arg_min = i;
      if (sweep[i].area > sweep[arg_max].area) arg_max = i;
    }
    const bool min_at_half = sweep[arg_min].center == Rational(1, 2) ||
                             sweep[n / 2].area == sweep[arg_min].area;
    const bool max_at_zero = sweep[0].area == sweep[arg_max].area;
    auto local = [&](std::size_t i, bool minimum) {
      const Rational& a = sweep[i - 1].area;
      const Rational& b = sweep[i].area;
      const Rational& c = sweep[i + 1].area;
      return minimum ? (b <= a && b <= c && (b < a || b < c)) : (b >= a && b >= c && (b > a || b > c));
    };
    std::vector<std::string> minima;
    std::vector<std::string> maxima;
    bool has_min = false;
    bool has_max = false;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const Rational& q = sweep[i].center;
      if (local(i, true) && q >= dec("0.22") && q <= dec("0.28")) {
        has_min = true;
        minima.push_back(q.to_decimal_string());
      }
      if (local(i, false) && q >= dec("0.28") && q <= dec("0.33")) {
        has_max = true;
        maxima.push_back(q.to_decimal_string());
      }
    }
    fmt::print(
        "  dq={}: A(0)={:.6f} A(0.5)={:.6f}; global min {:.6f} at q_c={}, global max {:.6f} at q_c={}; "
        "symmetric={}\n",
        w, sweep[0].area.to_double(), sweep[n / 2].area.to_double(), sweep[arg_min].area.to_double(),
        sweep[arg_min].center.to_decimal_string(), sweep[arg_max].area.to_double(),
        sweep[arg_max].center.to_decimal_string(), symmetric);
    fmt::print("    local minima in [0.22,0.28]: {}; local maxima in [0.28,0.33]: {}\n",
               minima.empty() ? "none" : fmt::format("{}", fmt::join(minima, " ")),
               maxima.empty() ? "none" : fmt::format("{}", fmt::join(maxima, " ")));
    fmt::print("    min at 0.5: {}, max at 0: {}, local min: {}, local max: {}\n", min_at_half, max_at_zero, has_min,
               has_max);
    all = all && symmetric && min_at_half && max_at_zero && has_min && has_max;
  }
  return all;
}

bool criterion_monte_carlo(const Context& ctx) {
  std::mt19937_64 rng(20260415);
  bool all = true;
  for (int k = 0; k < 20; ++k) {
    const Rational centre(static_cast<Int128>(rng() % 101), 100);
    const Rational width(static_cast<Int128>(1 + rng() % 30), 100);
    const auto t = static_cast<std::int64_t>(rng() % 13);
    const OpeningSpec o(centre, width);
    const double exact = survivor_set(o, t).measure().to_double();
    const auto mc = monte_carlo_area(o, t, 10'000'000, 1000 + static_cast<std::uint64_t>(k), ctx.jobs);
    const double z = mc.std_error > 0 ? (mc.estimate - exact) / mc.std_error : 0.0;
    const bool ok = std::abs(mc.estimate - exact) <= 3 * mc.std_error;
    fmt::print("  q_c={:<5} dq={:<5} t={:<2} exact={:.7f} mc={:.7f} se={:.2e} z={:+.2f} {}\n",
               centre.to_decimal_string(), width.to_decimal_string(), t, exact, mc.estimate, mc.std_error, z,
               ok ? "ok" : "OUTSIDE");
    all = all && ok;
  }
  return all;
}

bool criterion_unitarity(const Context&) {
  bool all = true;
  for (int n : {64, 256, 602}) {
    const ComplexMatrix b = baker_propagator(n);
    const double defect = unitarity_defect(b);
    double worst = 0;
    for (const Complex& z : eigenvalues(b)) worst = std::max(worst, std::abs(std::abs(z) - 1.0));
    fmt::print("  N={}: max | |z|-1 | = {:.2e}, ||B B^+ - I||_max = {:.2e}\n", n, worst, defect);
    all = all && worst <= 1e-8 && defect < 1e-11;
  }
  return all;
}

bool criterion_solver(const Context& ctx) {
  double worst = 0;
  int cases = 0;
  for (int n = 2; n <= 8; n += 2) {
    for (const char* c : {"0", "0.2", "0.3", "0.5", "0.75"}) {
      for (const char* w : {"0.1", "0.25", "0.5"}) {
        const ComplexMatrix b = open_propagator({n, OpeningSpec(dec(c), dec(w))});
        const double gap = testing::multiset_distance(testing::merge_clusters(eigenvalues(b), 1e-6),
                                                      testing::merge_clusters(testing::brute_force_spectrum(b), 1e-6));
        worst = std::max(worst, gap);
        ++cases;
      }
    }
  }
  fmt::print("  oracle: {} matrices (N in 2..8, 5x3 openings), worst multiset distance {:.2e} (limit 1e-9)\n", cases,
             worst);
  bool ok = worst < 1e-9;
  for (int n : {602, 2048}) {
    for (const char* c : {"0.3", "0.5"}) {
      const ResonanceSet set = ctx.spectrum(n, dec(c), dec("0.1"));
      const double defect = trace_defect(set);
      fmt::print("  N={} q_c={}: |sum z - tr B| = {:.2e} (limit {:.2e})\n", n, c, defect, 1e-8 * n);
      ok = ok && defect < 1e-8 * n;
    }
  }
  return ok;
}

bool criterion_weyl(const Context& ctx) {
  const std::vector<int> dims = {128, 180, 256, 362, 512, 724, 1024};
  bool all = true;
  for (const char* c : {"0.3", "0.5"}) {
    for (const char* w : {"0.05", "0.1", "0.2"}) {
      std::vector<WeylDataPoint> points;
      for (int n : dims) points.push_back(weyl_count(ctx.spectrum(n, dec(c), dec(w)), 0.3));
      double reference;
      std::string source;
      if (std::string(w) == "0.1") {
        reference = std::string(c) == "0.3" ? 1.86910 : 1.76213;
        source = "published";
      } else {
        reference = classical_escape_rate(OpeningSpec(dec(c), dec(w))).information_dimension;
        source = "classical fit";
      }
      const WeylFit fit = weyl_fit(points, reference);
      const bool ok = std::abs(fit.slope_deviation()) <= 0.06;
      std::string counts;
      for (const auto& p : points) counts += fmt::format(" {}", p.count);
      fmt::print("  q_c={} dq={:<4}: slope {:.4f} vs d_I-1 = {:.4f} ({}), deviation {:+.4f} {}; counts{}\n", c, w,
                 fit.slope, fit.reference_slope, source, fit.slope_deviation(), ok ? "ok" : "OUTSIDE", counts);
      all = all && ok;
    }
  }
  return all;
}

double width_at(const Context& ctx, int n, const char* centre) {
  return half_height_width(tail_histogram(ctx.spectrum(n, dec(centre), dec("0.1"))));
}

bool criterion_width_contrast(const Context& ctx) {
  std::vector<double> a;
  std::vector<double> b;
  for (int n = 500; n <= 1190; n += 30) {
    if (n == 602 || n == 1782) continue;
    b.push_back(width_at(ctx, n, "0.3"));
    a.push_back(width_at(ctx, n, "0.5"));
  }
  const double ratio = median(a) / median(b);
  fmt::print("  sample N = 500..1190 step 30 ({} values): median sigma(0.5) = {:.4f}, median sigma(0.3) = {:.4f}, "
             "ratio {:.3f} (accept [1.1, 2.0])\n",
             a.size(), median(a), median(b), ratio);
  bool ok = a.size() >= 20 && ratio >= 1.1 && ratio <= 2.0;
  for (const auto& [n, above] : std::vector<std::pair<int, bool>>{{602, true}, {1782, false}}) {
    std::vector<double> window;
    std::string shown;
    for (int m = n - 4; m <= n + 4; m += 2) {
      window.push_back(width_at(ctx, m, "0.5"));
      shown += fmt::format(" {}:{:.2f}", m, window.back());
    }
    const double centre = window[2];
    const double med = median(window);
    const bool hit = above ? centre > med : centre < med;
    fmt::print("  N={} q_c=0.5: sigma = {:.2f}, 5-point median {:.2f} (expected {}) {};{}\n", n, centre, med,
               above ? "above" : "below", hit ? "ok" : "NOT MET", shown);
    ok = ok && hit;
  }
  return ok;
}

bool criterion_rescaling(const Context& ctx) {
  const double gamma = classical_escape_rate(OpeningSpec(dec("0.3"), dec("0.1"))).gamma_cl;
  bool ok = true;
  for (int n : {602, 1024}) {
    const RescaledHistogram h = rescaled_decay_histogram(ctx.spectrum(n, dec("0.3"), dec("0.1")), gamma);
    const RescaledBin& peak = h.peak();
    const bool hit = peak.center() >= 0.6 && peak.center() <= 1.5;
    fmt::print("  N={}: peak bin Gamma/gamma_cl in [{:.3f}, {:.3f}], centre {:.3f} {}\n", n, peak.x_lo, peak.x_hi,
               peak.center(), hit ? "ok" : "OUTSIDE");
    ok = ok && hit;
  }
  return ok;
}

std::map<std::string, std::string> artifacts(const Context& ctx, bool use_cache) {
  std::map<std::string, std::string> out;
  auto spectrum = [&](int n, const char* c) {
    if (use_cache) return ctx.spectrum(n, dec(c), dec("0.1"));
    return resonance_set(PropagatorSpec{n, OpeningSpec(dec(c), dec("0.1"))});
  };
  const auto grid = rational_grid(Rational(0), Rational(1, 2), Rational(1, 200));
  out["classical_dq0.1.csv"] = io::sweep_csv(qc_sweep(dec("0.1"), grid, 9, {}, ctx.jobs));
  out["series.csv"] = io::series_csv(area_series(OpeningSpec(dec("0.3"), dec("0.1")), 25));
  const double gamma = classical_escape_rate(OpeningSpec(dec("0.3"), dec("0.1"))).gamma_cl;
  for (const char* c : {"0.3", "0.5"}) {
    const ResonanceSet set = spectrum(602, c);
    const std::string tag = fmt::format("N602_qc{}", c);
    out["spectrum_" + tag] = io::spectrum_csv(set);
    out["cumulative_" + tag] = io::cumulative_csv(cumulative_count(set));
    out["histogram_" + tag] = io::histogram_csv(tail_histogram(set));
    out["rescaled_" + tag] = io::rescaled_csv(rescaled_decay_histogram(set, gamma));
  }
  std::vector<WeylDataPoint> points;
  for (int n : {128, 180, 256, 362}) points.push_back(weyl_count(spectrum(n, "0.3"), 0.3));
  out["weyl.csv"] = io::weyl_csv(points);
  const auto widths = width_sweep({600, 604}, {dec("0.3"), dec("0.5")}, dec("0.1"),
                                  [&](const PropagatorSpec& s) {
                                    return use_cache ? ctx.spectrum(s.dimension, s.opening.center(), s.opening.width())
                                                     : resonance_set(s);
                                  });
  out["width.csv"] = io::width_csv(widths);
  const auto mc = monte_carlo_area(OpeningSpec(dec("0.5"), dec("0.1")), 9, 1'000'000, 77, ctx.jobs);
  out["mc.csv"] = fmt::format("{:.17g},{:.17g}\n", mc.estimate, mc.std_error);
  return out;
}

bool criterion_determinism(const Context& ctx) {
  const auto first = artifacts(ctx, false);
  const auto second = artifacts(ctx, false);
  const auto cached = artifacts(ctx, true);
  bool ok = true;
  for (const auto& [name, content] : first) {
    const bool same = second.at(name) == content && cached.at(name) == content;
    if (!same) fmt::print("  {} differs between runs\n", name);
    ok = ok && same;
  }
  fmt::print("  {} CSV artifacts compared across two fresh runs and one cache-served run\n", first.size());
  return ok;
}

struct Criterion {
  int id;
  const char* title;
  std::function<bool(const Context&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"openbaker acceptance suite"};
  std::vector<int> selected;
  Context ctx;
  ctx.cache_dir = "acceptance-cache";
  app.add_option("--criterion", selected, "Criteria to run (default: all)")->check(CLI::Range(1, 10));
  app.add_option("--cache", ctx.cache_dir, "Spectrum cache directory");
  app.add_option("--jobs", ctx.jobs)->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "classical escape rates", criterion_escape_rates},
      {2, "information dimensions", criterion_information_dimensions},
      {3, "trapped-area sweep shape", criterion_sweep_shape},
      {4, "Monte Carlo oracle agreement", criterion_monte_carlo},
      {5, "closed-map unitarity", criterion_unitarity},
      {6, "eigensolver validity", criterion_solver},
      {7, "fractal Weyl law slopes", criterion_weyl},
      {8, "width contrast and anomalies", criterion_width_contrast},
      {9, "rescaling collapse", criterion_rescaling},
      {10, "determinism", criterion_determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    fmt::print("criterion {}: {}\n", c.id, c.title);
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(ctx);
    } catch (const std::exception& e) {
      fmt::print("  error: {}\n", e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    fmt::print("[{}] criterion {}: {} ({:.1f} s)\n", ok ? "PASS" : "FAIL", c.id, c.title, seconds);
    std::fflush(stdout);
    failures += !ok;
  }
  return failures == 0 ? 0 : 1;
}
