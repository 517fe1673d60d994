#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "lucbh/core.hpp"
#include "lucbh/policy.hpp"
#include "lucbh/random.hpp"

namespace lucbh {

enum class Algorithm { pure_lucb, lucb_h };

inline const char* algorithm_name(Algorithm a) {
  return a == Algorithm::pure_lucb ? "pure_lucb" : "lucb_h";
}

/// One curve of a sweep: which policy to run and, for the history-aware
/// policy, which offline means to generate data from (absent = the base
/// instance's own).
struct SeriesSpec {
  std::string label;
  Algorithm algorithm = Algorithm::lucb_h;
  std::optional<std::vector<double>> mu_off;
};

enum class SweepAxis { delta, t_s, v_suboptimal, v_all };

inline const char* axis_name(SweepAxis a) {
  switch (a) {
    case SweepAxis::delta: return "delta";
    case SweepAxis::t_s: return "t_s";
    case SweepAxis::v_suboptimal: return "v_suboptimal";
    case SweepAxis::v_all: return "v_all";
  }
  return "?";
}

/// A full experiment: a base instance, one swept parameter with its grid, and
/// the series to run at every grid point.
struct ExperimentSpec {
  std::string name;
  Instance base;
  SweepAxis axis = SweepAxis::delta;
  std::vector<double> grid;
  std::vector<SeriesSpec> series;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::int64_t budget = kDefaultSampleBudget;
};

/// Aggregates over the trials of one (grid point, series) cell.
struct PointStats {
  double mean_tau = 0.0;
  double stderr_tau = 0.0;
  double error_rate = 0.0;
  std::vector<double> mean_pulls;
  std::int64_t truncated = 0;
  std::size_t trials = 0;
};

struct SweepRow {
  double axis_value = 0.0;
  std::string algorithm;
  std::string label;
  PointStats stats;
};

struct SweepResult {
  ExperimentSpec spec;
  std::vector<SweepRow> rows;  // grid-major, series in spec order
  double wall_seconds = 0.0;
};

namespace detail {

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  const unsigned spawn = std::min<std::size_t>(threads, n);
  pool.reserve(spawn);
  for (unsigned w = 0; w < spawn; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace detail

/// Runs `trials` independent trials of one policy on one instance. Trial i
/// draws from streams keyed by (seed, i), so the result is a pure function of
/// the arguments regardless of the worker count. Truncated trials are counted
/// and kept in the averages.
inline PointStats run_point(const Instance& inst, Algorithm algo, std::size_t trials,
                            std::uint64_t seed, std::int64_t budget = kDefaultSampleBudget,
                            unsigned threads = 1) {
  if (trials < 2) fail(Errc::config_error, "need at least 2 trials for a standard error");
  std::vector<RunResult> results(trials);
  detail::parallel_for(trials, threads, [&](std::size_t trial) {
    TrialRng rng(seed, trial);
    if (algo == Algorithm::lucb_h) {
      const OfflineSummary off = generate_offline(inst, rng);
      results[trial] = run_lucb_h(inst, off, rng, budget);
    } else {
      results[trial] = run_pure_lucb(inst, rng, budget);
    }
  });

  PointStats st;
  st.trials = trials;
  st.mean_pulls.assign(inst.k, 0.0);
  double sum = 0.0;
  for (const auto& r : results) {
    sum += static_cast<double>(r.tau);
    for (std::size_t i = 0; i < inst.k; ++i)
      st.mean_pulls[i] += static_cast<double>(r.pulls[i]);
    st.error_rate += r.correct ? 0.0 : 1.0;
    st.truncated += r.truncated ? 1 : 0;
  }
  const double n = static_cast<double>(trials);
  st.mean_tau = sum / n;
  double ss = 0.0;
  for (const auto& r : results) {
    const double d = static_cast<double>(r.tau) - st.mean_tau;
    ss += d * d;
  }
  st.stderr_tau = std::sqrt(ss / (n - 1.0) / n);
  st.error_rate /= n;
  for (auto& p : st.mean_pulls) p /= n;
  return st;
}

/// Base instance with the swept parameter replaced by one grid value.
inline Instance apply_axis(const Instance& base, SweepAxis axis, double value) {
  Instance inst = base;
  switch (axis) {
    case SweepAxis::delta:
      if (!(value > 0.0 && value < 1.0))
        fail(Errc::config_error, "delta grid values must lie in (0,1)");
      inst.delta = value;
      break;
    case SweepAxis::t_s: {
      if (!(value >= 0.0) || value != std::floor(value))
        fail(Errc::config_error, "t_s grid values must be nonnegative integers");
      inst.t_s.assign(base.k, static_cast<std::int64_t>(value));
      break;
    }
    case SweepAxis::v_suboptimal:
      if (!(value >= 0.0)) fail(Errc::config_error, "v grid values must be nonnegative");
      for (std::size_t i = 0; i < base.k; ++i)
        if (i != base.best_arm) inst.v[i] = BiasBound(value);
      break;
    case SweepAxis::v_all:
      if (!(value >= 0.0)) fail(Errc::config_error, "v grid values must be nonnegative");
      inst.v.assign(base.k, BiasBound(value));
      break;
  }
  return inst;
}

inline void validate_spec(const ExperimentSpec& spec) {
  if (spec.grid.empty()) fail(Errc::config_error, "sweep grid is empty");
  if (spec.series.empty()) fail(Errc::config_error, "no series to run");
  if (spec.trials < 2) fail(Errc::config_error, "need at least 2 trials per point");
  if (spec.budget < 1) fail(Errc::config_error, "budget must be positive");
  for (const auto& s : spec.series)
    if (s.mu_off && s.mu_off->size() != spec.base.k)
      fail(Errc::config_error, "series '" + s.label + "' offline means have the wrong length");
}

/// Runs every series at every grid point. Row order is grid-major with series
/// in spec order; the aggregation is a fixed-order reduce, so output is
/// byte-stable for a fixed (spec, seed) whatever the thread count.
inline SweepResult run_sweep(const ExperimentSpec& spec, unsigned threads = 1) {
  validate_spec(spec);
  const auto t0 = std::chrono::steady_clock::now();
  SweepResult out;
  out.spec = spec;
  for (const double value : spec.grid) {
    const Instance point = apply_axis(spec.base, spec.axis, value);
    for (const auto& series : spec.series) {
      Instance inst = point;
      if (series.mu_off) inst.mu_off = *series.mu_off;
      SweepRow row;
      row.axis_value = value;
      row.algorithm = algorithm_name(series.algorithm);
      row.label = series.label;
      row.stats = run_point(inst, series.algorithm, spec.trials, spec.seed, spec.budget, threads);
      out.rows.push_back(std::move(row));
    }
  }
  out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace lucbh
