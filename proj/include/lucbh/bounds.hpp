#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "lucbh/core.hpp"

namespace lucbh {

/// Shared log term log(k*t/delta) for round t. Natural log.
inline double round_log_term(std::size_t k, std::size_t t, double delta) {
  return std::log(static_cast<double>(k) * static_cast<double>(t) / delta);
}

/// Width of the online-only confidence interval at sample count n.
inline double online_radius(double log_term, std::int64_t n) {
  return std::sqrt(log_term / static_cast<double>(n));
}

struct BoundPair {
  double lo;
  double hi;
};

/// Per-arm confidence intervals for one round: online-only, history-adjusted,
/// and their combination (tighter of the two on each side).
struct BoundSet {
  std::vector<double> lcb_on, ucb_on;
  std::vector<double> lcb_s, ucb_s;
  std::vector<double> lcb_mix, ucb_mix;

  explicit BoundSet(std::size_t k)
      : lcb_on(k), ucb_on(k), lcb_s(k), ucb_s(k), lcb_mix(k), ucb_mix(k) {}
};

inline BoundPair online_bounds(const AlgorithmState& state, std::size_t arm, std::size_t k,
                               double delta) {
  const double rad = online_radius(round_log_term(k, state.t, delta), state.n[arm]);
  return {state.y_hat[arm] - rad, state.y_hat[arm] + rad};
}

/// History-adjusted interval around the pooled online/offline mean. The radius
/// has a concentration part (pooled sample count) plus a bias compensation
/// proportional to the offline weight. An unbounded bias bound yields an
/// infinite interval, so the mix falls back to the online bounds.
inline BoundPair history_bounds(const AlgorithmState& state, const OfflineSummary& off,
                                const Instance& inst, std::size_t arm) {
  const double inf = std::numeric_limits<double>::infinity();
  if (inst.v[arm].is_unbounded()) return {-inf, inf};
  const std::int64_t n = state.n[arm];
  const std::int64_t ts = off.t_s[arm];
  const double log_term = round_log_term(inst.k, state.t, inst.delta);
  if (ts == 0) {
    // Zero history reduces exactly (not just approximately) to the online
    // interval; shared arithmetic keeps the reduction bit-identical.
    const double rad = online_radius(log_term, n);
    return {state.y_hat[arm] - rad, state.y_hat[arm] + rad};
  }
  const double m = static_cast<double>(n + ts);
  const double pooled_mean =
      (static_cast<double>(n) * state.y_hat[arm] + static_cast<double>(ts) * off.x_hat[arm]) / m;
  const double rad = std::sqrt(log_term / m) + static_cast<double>(ts) / m * inst.v[arm].value();
  return {pooled_mean - rad, pooled_mean + rad};
}

/// Componentwise max of lower bounds and min of upper bounds. With a
/// misspecified bias bound the mixed interval may come out empty
/// (lcb_mix > ucb_mix); that is deliberate and flows through selection and
/// stopping unmodified.
inline void mix_bounds(BoundSet& bs) {
  for (std::size_t i = 0; i < bs.lcb_on.size(); ++i) {
    bs.lcb_mix[i] = std::max(bs.lcb_on[i], bs.lcb_s[i]);
    bs.ucb_mix[i] = std::min(bs.ucb_on[i], bs.ucb_s[i]);
  }
}

/// Bounds for every arm using both online and offline information.
inline BoundSet compute_bounds(const AlgorithmState& state, const OfflineSummary& off,
                               const Instance& inst) {
  BoundSet bs(inst.k);
  for (std::size_t i = 0; i < inst.k; ++i) {
    const BoundPair on = online_bounds(state, i, inst.k, inst.delta);
    const BoundPair hist = history_bounds(state, off, inst, i);
    bs.lcb_on[i] = on.lo;
    bs.ucb_on[i] = on.hi;
    bs.lcb_s[i] = hist.lo;
    bs.ucb_s[i] = hist.hi;
  }
  mix_bounds(bs);
  return bs;
}

/// Online-only bounds in every slot; the mix degenerates to them.
inline BoundSet compute_bounds_online_only(const AlgorithmState& state, const Instance& inst) {
  BoundSet bs(inst.k);
  for (std::size_t i = 0; i < inst.k; ++i) {
    const BoundPair on = online_bounds(state, i, inst.k, inst.delta);
    bs.lcb_on[i] = bs.lcb_s[i] = bs.lcb_mix[i] = on.lo;
    bs.ucb_on[i] = bs.ucb_s[i] = bs.ucb_mix[i] = on.hi;
  }
  return bs;
}

struct Selection {
  std::size_t h;
  std::size_t l;
};

/// The two arms contending for the next pulls: the largest mixed upper bound
/// and the runner-up. Ties go to the lowest index.
inline Selection select(const BoundSet& bs) {
  const std::size_t k = bs.ucb_mix.size();
  std::size_t h = 0;
  for (std::size_t i = 1; i < k; ++i)
    if (bs.ucb_mix[i] > bs.ucb_mix[h]) h = i;
  std::size_t l = h == 0 ? 1 : 0;
  for (std::size_t i = l + 1; i < k; ++i)
    if (i != h && bs.ucb_mix[i] > bs.ucb_mix[l]) l = i;
  return {h, l};
}

/// Stop once the leader's lower bound clears the runner-up's upper bound
/// (inclusive at equality).
inline bool should_stop(const BoundSet& bs, const Selection& sel) {
  return bs.lcb_mix[sel.h] >= bs.ucb_mix[sel.l];
}

}  // namespace lucbh
