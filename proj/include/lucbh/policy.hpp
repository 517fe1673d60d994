#pragma once

#include <cstdint>
#include <vector>

#include "lucbh/bounds.hpp"
#include "lucbh/core.hpp"
#include "lucbh/random.hpp"

namespace lucbh {

inline constexpr std::int64_t kDefaultSampleBudget = 10'000'000;

/// Outcome of a single trial. tau counts online samples (the stopping time);
/// rounds counts completed pulling rounds, so tau == k + 2*rounds.
struct RunResult {
  std::int64_t tau = 0;
  std::vector<std::int64_t> pulls;
  std::size_t recommended = 0;
  bool correct = false;
  std::int64_t rounds = 0;
  bool truncated = false;

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

namespace detail {

struct NoopObserver {
  void operator()(const AlgorithmState&, const BoundSet&, const Selection&, bool) const {}
};

// Common loop for both policies. Initialization pulls each arm once; every
// later round recomputes bounds, checks the stopping rule before pulling, and
// otherwise pulls the two contenders. The budget caps total online samples;
// exhausting it flags the result as truncated instead of failing.
template <class BoundsFn, class Observer>
RunResult run_loop(const Instance& inst, GaussianStream& online, std::int64_t budget,
                   BoundsFn&& bounds_fn, Observer&& observe) {
  const std::size_t k = inst.k;
  AlgorithmState state;
  state.n.assign(k, 0);
  state.y_hat.assign(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    state.y_hat[i] = online.draw(inst.mu_on[i]);
    state.n[i] = 1;
  }
  state.t = k + 1;

  RunResult res;
  res.tau = static_cast<std::int64_t>(k);

  const auto pull = [&](std::size_t arm) {
    const double y = online.draw(inst.mu_on[arm]);
    const double n = static_cast<double>(state.n[arm]);
    state.y_hat[arm] = (n * state.y_hat[arm] + y) / (n + 1.0);
    state.n[arm] += 1;
  };

  for (;;) {
    const BoundSet bs = bounds_fn(state);
    const Selection sel = select(bs);
    const bool stop = should_stop(bs, sel);
    observe(state, bs, sel, stop);
    if (stop) {
      res.recommended = sel.h;  // argmax of the mixed upper bounds
      break;
    }
    if (res.tau + 2 > budget) {
      res.recommended = sel.h;
      res.truncated = true;
      break;
    }
    pull(sel.h);
    pull(sel.l);
    state.t += 1;
    res.tau += 2;
    res.rounds += 1;
  }

  res.pulls = state.n;
  res.correct = res.recommended == inst.best_arm;
  return res;
}

}  // namespace detail

/// LUCB-H: per arm, the tighter of the online-only and history-adjusted
/// confidence bounds drives selection, stopping and the recommendation.
template <class Observer>
RunResult run_lucb_h_observed(const Instance& inst, const OfflineSummary& off, TrialRng& rng,
                              std::int64_t budget, Observer&& observe) {
  return detail::run_loop(
      inst, rng.online, budget,
      [&](const AlgorithmState& s) { return compute_bounds(s, off, inst); },
      std::forward<Observer>(observe));
}

inline RunResult run_lucb_h(const Instance& inst, const OfflineSummary& off, TrialRng& rng,
                            std::int64_t budget = kDefaultSampleBudget) {
  return run_lucb_h_observed(inst, off, rng, budget, detail::NoopObserver{});
}

/// Plain LUCB on online data only; offline data is never consulted.
template <class Observer>
RunResult run_pure_lucb_observed(const Instance& inst, TrialRng& rng, std::int64_t budget,
                                 Observer&& observe) {
  return detail::run_loop(
      inst, rng.online, budget,
      [&](const AlgorithmState& s) { return compute_bounds_online_only(s, inst); },
      std::forward<Observer>(observe));
}

inline RunResult run_pure_lucb(const Instance& inst, TrialRng& rng,
                               std::int64_t budget = kDefaultSampleBudget) {
  return run_pure_lucb_observed(inst, rng, budget, detail::NoopObserver{});
}

}  // namespace lucbh
