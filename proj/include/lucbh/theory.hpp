#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "lucbh/core.hpp"

namespace lucbh {

// Closed-form quantities attached to an instance: per-arm saving terms for the
// achievable and information-theoretic sample-count bounds, the gap between
// them in the two analyzable regimes, and unit-constant reference
// complexities. All logs here are natural.

inline double kl_gaussian(double mu1, double mu2) {
  const double d = mu1 - mu2;
  return 0.5 * d * d;
}

/// KL divergence between Bernoulli(p) and Bernoulli(q), with the conventions
/// d(0,0) = d(1,1) = 0 and +inf when q is degenerate but p is not.
inline double binary_relative_entropy(double p, double q) {
  const double inf = std::numeric_limits<double>::infinity();
  if (p == q) return 0.0;
  if (q <= 0.0 || q >= 1.0) return inf;
  double r = 0.0;
  if (p > 0.0) r += p * std::log(p / q);
  if (p < 1.0) r += (1.0 - p) * std::log((1.0 - p) / (1.0 - q));
  return r;
}

namespace detail {
inline void require_suboptimal(const Instance& inst, std::size_t arm, const char* what) {
  if (arm == inst.best_arm)
    fail(Errc::best_arm_query, std::string(what) + " is undefined for the best arm");
}
}  // namespace detail

/// Sample savings credited to offline data in the achievable bound:
/// T_S(i) * max{1 - 4*eta(i)/Delta_i, 0}. Zero when the bias bound is
/// unbounded (the clamp fires).
inline double sav_u(const Instance& inst, std::size_t arm) {
  detail::require_suboptimal(inst, arm, "sav_u");
  if (inst.v[arm].is_unbounded()) return 0.0;
  const double gap = inst.mu_on[inst.best_arm] - inst.mu_on[arm];
  const double eta = inst.v[arm].value() + inst.mu_off[arm] - inst.mu_on[arm];
  return static_cast<double>(inst.t_s[arm]) * std::max(1.0 - 4.0 * eta / gap, 0.0);
}

/// Sample savings in the information-theoretic bound:
/// T_S(i) * max{(mu_off(best) - mu_off(i)) / Delta_i, 0}^2.
inline double sav_l(const Instance& inst, std::size_t arm) {
  detail::require_suboptimal(inst, arm, "sav_l");
  const double gap = inst.mu_on[inst.best_arm] - inst.mu_on[arm];
  const double r = std::max((inst.mu_off[inst.best_arm] - inst.mu_off[arm]) / gap, 0.0);
  return static_cast<double>(inst.t_s[arm]) * r * r;
}

enum class GapCase {
  equal_v,            // every arm shares one finite bias bound
  best_arm_unbiased,  // the best arm's offline and online means coincide
};

/// Difference between the two saving terms in the regimes where it has a
/// closed form. equal_v: ((eta_i - eta_1)^2/Delta^2 + 2(eta_i + eta_1)/Delta) * T_S;
/// best_arm_unbiased: same with eta_1 replaced by V(i).
inline double gap_term(const Instance& inst, std::size_t arm, GapCase gcase) {
  detail::require_suboptimal(inst, arm, "gap_term");
  const std::size_t best = inst.best_arm;
  const double gap = inst.mu_on[best] - inst.mu_on[arm];
  if (inst.v[arm].is_unbounded())
    fail(Errc::case_precondition, "gap_term needs a finite bias bound on the queried arm");
  const double eta_i = inst.v[arm].value() + inst.mu_off[arm] - inst.mu_on[arm];
  double other = 0.0;
  switch (gcase) {
    case GapCase::equal_v: {
      for (const auto& b : inst.v)
        if (b.is_unbounded() || !(b == inst.v[arm]))
          fail(Errc::case_precondition, "equal_v case requires one shared finite bias bound");
      other = inst.v[best].value() + inst.mu_off[best] - inst.mu_on[best];  // eta(best)
      break;
    }
    case GapCase::best_arm_unbiased: {
      if (inst.mu_on[best] != inst.mu_off[best])
        fail(Errc::case_precondition,
             "best_arm_unbiased case requires equal offline/online means on the best arm");
      other = inst.v[arm].value();
      break;
    }
  }
  const double a = (eta_i - other) / gap;
  return (a * a + 2.0 * (eta_i + other) / gap) * static_cast<double>(inst.t_s[arm]);
}

/// Sum over suboptimal arms of max{ln(1/(2.4 delta)) / KL(mu_on_i, mu_on_best)
/// - sav_l(i), 0}: the explicit-constant information-theoretic reference.
inline double lower_bound_total(const Instance& inst) {
  const double log_term = std::log(1.0 / (2.4 * inst.delta));
  double total = 0.0;
  for (std::size_t i = 0; i < inst.k; ++i) {
    if (i == inst.best_arm) continue;
    const double kl = kl_gaussian(inst.mu_on[i], inst.mu_on[inst.best_arm]);
    total += std::max(log_term / kl - sav_l(inst, i), 0.0);
  }
  return total;
}

/// Sum over suboptimal arms of max{32/Delta_i^2 * ln(k/delta) - sav_u(i), 0}:
/// the explicit-constant achievable reference.
inline double upper_bound_total(const Instance& inst) {
  const double log_term = std::log(static_cast<double>(inst.k) / inst.delta);
  double total = 0.0;
  for (std::size_t i = 0; i < inst.k; ++i) {
    if (i == inst.best_arm) continue;
    const double gap = inst.mu_on[inst.best_arm] - inst.mu_on[i];
    total += std::max(32.0 / (gap * gap) * log_term - sav_u(inst, i), 0.0);
  }
  return total;
}

struct ReferenceComplexities {
  double lucb_reference = 0.0;      // sum Delta_i^-2 ln(1/delta), no offline credit
  double batch_ts_reference = 0.0;  // same with T_S(i) subtracted and clamped at 0
};

inline ReferenceComplexities reference_complexities(const Instance& inst) {
  ReferenceComplexities rc;
  const double log_term = std::log(1.0 / inst.delta);
  for (std::size_t i = 0; i < inst.k; ++i) {
    if (i == inst.best_arm) continue;
    const double gap = inst.mu_on[inst.best_arm] - inst.mu_on[i];
    const double base = log_term / (gap * gap);
    rc.lucb_reference += base;
    rc.batch_ts_reference += std::max(base - static_cast<double>(inst.t_s[i]), 0.0);
  }
  return rc;
}

/// Everything cmd_bounds reports for one instance. Saving terms are absent
/// (nullopt) on the best arm; the gap column is absent unless one of the two
/// analyzable regimes applies to the whole instance.
struct BoundReport {
  std::vector<double> delta_i;
  std::vector<BiasBound> eta;
  std::vector<std::optional<double>> sav_u;
  std::vector<std::optional<double>> sav_l;
  std::vector<std::optional<double>> gap;
  std::optional<GapCase> gap_case;
  double upper_bound_total = 0.0;
  double lower_bound_total = 0.0;
  double lucb_reference = 0.0;
  double batch_ts_reference = 0.0;
};

inline BoundReport make_bound_report(const Instance& inst) {
  BoundReport rep;
  const GapProfile prof = gap_profile(inst);
  rep.delta_i = prof.delta_i;
  rep.eta = prof.eta;
  rep.sav_u.resize(inst.k);
  rep.sav_l.resize(inst.k);
  rep.gap.resize(inst.k);

  bool equal_v = !inst.v[0].is_unbounded();
  for (std::size_t i = 1; i < inst.k && equal_v; ++i)
    equal_v = !inst.v[i].is_unbounded() && inst.v[i] == inst.v[0];
  if (equal_v)
    rep.gap_case = GapCase::equal_v;
  else if (inst.mu_on[inst.best_arm] == inst.mu_off[inst.best_arm])
    rep.gap_case = GapCase::best_arm_unbiased;

  for (std::size_t i = 0; i < inst.k; ++i) {
    if (i == inst.best_arm) continue;
    rep.sav_u[i] = sav_u(inst, i);
    rep.sav_l[i] = sav_l(inst, i);
    if (rep.gap_case && !inst.v[i].is_unbounded())
      rep.gap[i] = gap_term(inst, i, *rep.gap_case);
  }
  rep.upper_bound_total = upper_bound_total(inst);
  rep.lower_bound_total = lower_bound_total(inst);
  const auto rc = reference_complexities(inst);
  rep.lucb_reference = rc.lucb_reference;
  rep.batch_ts_reference = rc.batch_ts_reference;
  return rep;
}

/// Two-arm instance pair on which no bias-oblivious policy can win twice:
/// offline data is genuinely helpful on instance_p and arbitrarily misleading
/// on instance_q. Both carry unbounded bias bounds; runners choose their own V.
struct ImpossibilityPair {
  double beta = 0.0;
  double epsilon = 0.0;
  double c = 0.0;
  double delta = 0.0;
  Instance instance_p;
  Instance instance_q;
};

inline ImpossibilityPair build_impossibility_pair(double beta, double epsilon, double c,
                                                  double delta,
                                                  std::vector<std::int64_t> t_s = {200, 200}) {
  if (!(beta > 0.0)) fail(Errc::invalid_argument, "beta must be positive");
  if (!(epsilon > 0.0)) fail(Errc::invalid_argument, "epsilon must be positive");
  if (!(c > 0.0)) fail(Errc::invalid_argument, "c must be positive");
  if (!(delta > 0.0 && delta < 1.0)) fail(Errc::delta_out_of_range, "delta must lie in (0,1)");
  if (t_s.size() != 2) fail(Errc::length_mismatch, "t_s must have length 2");
  const double shrink = 1.0 - std::pow(delta, epsilon);
  if (shrink <= 0.0)
    fail(Errc::degenerate_epsilon, "delta^epsilon is 1 within machine precision");

  const double d_beta = std::pow(delta, beta);
  const double q2_off = -std::sqrt(8.0 * std::pow(delta, -2.0 * beta - epsilon) / (c * shrink)) -
                        d_beta;
  const auto unb = BiasBound::unbounded();
  ImpossibilityPair pair;
  pair.beta = beta;
  pair.epsilon = epsilon;
  pair.c = c;
  pair.delta = delta;
  pair.instance_p = make_instance({0.0, -d_beta}, {0.0, -d_beta}, t_s, {unb, unb}, delta);
  pair.instance_q = make_instance({0.0, d_beta}, {0.0, q2_off}, t_s, {unb, unb}, delta);
  return pair;
}

/// Copy of an instance with every bias bound replaced. Lets impossibility
/// experiments run the history-aware policy under a chosen V.
inline Instance with_bias_bound(const Instance& inst, BiasBound v) {
  Instance out = inst;
  out.v.assign(inst.k, v);
  return out;
}

}  // namespace lucbh
