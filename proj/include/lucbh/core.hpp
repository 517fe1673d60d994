#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lucbh {

enum class Errc {
  length_mismatch,
  duplicate_best,
  delta_out_of_range,
  invalid_argument,
  best_arm_query,
  case_precondition,
  degenerate_epsilon,
  unknown_preset,
  config_error,
  parse_error,
  io_error,
};

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

/// A nonnegative real or "unbounded". Kept as an explicit tagged value (not a
/// large float) so min/max and clamping logic downstream stays exact.
class BiasBound {
 public:
  constexpr BiasBound() = default;
  constexpr BiasBound(double v) : value_(v) {}
  static constexpr BiasBound unbounded() {
    BiasBound b;
    b.unbounded_ = true;
    return b;
  }
  constexpr bool is_unbounded() const { return unbounded_; }
  constexpr double value() const {
    assert(!unbounded_);
    return value_;
  }
  friend constexpr bool operator==(const BiasBound& a, const BiasBound& b) {
    if (a.unbounded_ != b.unbounded_) return false;
    return a.unbounded_ || a.value_ == b.value_;
  }

 private:
  double value_ = 0.0;
  bool unbounded_ = false;
};

/// Full description of a problem: online/offline Gaussian means (unit
/// variance), per-arm offline sample counts, per-arm bias bounds and the
/// confidence parameter. Immutable after construction.
struct Instance {
  std::size_t k = 0;
  std::vector<double> mu_on;
  std::vector<double> mu_off;
  std::vector<std::int64_t> t_s;
  std::vector<BiasBound> v;
  double delta = 0.0;
  std::size_t best_arm = 0;  // unique argmax of mu_on, set by make_instance
};

/// Per-arm offline sample counts and empirical means. Arms with no offline
/// samples carry an empirical mean of 0 by convention.
struct OfflineSummary {
  std::vector<std::int64_t> t_s;
  std::vector<double> x_hat;
};

/// Mutable per-trial state of a running policy: round counter, per-arm online
/// pull counts and empirical means.
struct AlgorithmState {
  std::size_t t = 0;
  std::vector<std::int64_t> n;
  std::vector<double> y_hat;
};

/// Suboptimality gaps and per-arm discrepancies (bias bound plus actual mean
/// shift). The discrepancy is unbounded wherever the bias bound is.
struct GapProfile {
  std::vector<double> delta_i;
  std::vector<BiasBound> eta;
};

inline Instance make_instance(std::vector<double> mu_on, std::vector<double> mu_off,
                              std::vector<std::int64_t> t_s, std::vector<BiasBound> v,
                              double delta) {
  const std::size_t k = mu_on.size();
  if (k < 2) fail(Errc::length_mismatch, "need at least 2 arms, got " + std::to_string(k));
  if (mu_off.size() != k || t_s.size() != k || v.size() != k)
    fail(Errc::length_mismatch, "mu_on/mu_off/t_s/v must all have length k=" + std::to_string(k));
  if (!(delta > 0.0 && delta < 1.0))
    fail(Errc::delta_out_of_range, "delta must lie in (0,1), got " + std::to_string(delta));
  for (std::size_t i = 0; i < k; ++i) {
    if (!std::isfinite(mu_on[i]) || !std::isfinite(mu_off[i]))
      fail(Errc::invalid_argument, "non-finite mean for arm " + std::to_string(i + 1));
    if (t_s[i] < 0) fail(Errc::invalid_argument, "negative offline count for arm " + std::to_string(i + 1));
    if (!v[i].is_unbounded() && !(v[i].value() >= 0.0 && std::isfinite(v[i].value())))
      fail(Errc::invalid_argument, "bias bound for arm " + std::to_string(i + 1) + " must be >= 0 or unbounded");
  }
  const auto it = std::max_element(mu_on.begin(), mu_on.end());
  if (std::count(mu_on.begin(), mu_on.end(), *it) != 1)
    fail(Errc::duplicate_best, "online means must have a unique maximum");
  Instance inst;
  inst.k = k;
  inst.best_arm = static_cast<std::size_t>(it - mu_on.begin());
  inst.mu_on = std::move(mu_on);
  inst.mu_off = std::move(mu_off);
  inst.t_s = std::move(t_s);
  inst.v = std::move(v);
  inst.delta = delta;
  return inst;
}

inline GapProfile gap_profile(const Instance& inst) {
  GapProfile g;
  g.delta_i.resize(inst.k);
  g.eta.resize(inst.k);
  const double top = inst.mu_on[inst.best_arm];
  for (std::size_t i = 0; i < inst.k; ++i) {
    g.delta_i[i] = top - inst.mu_on[i];
    g.eta[i] = inst.v[i].is_unbounded()
                   ? BiasBound::unbounded()
                   : BiasBound(inst.v[i].value() + inst.mu_off[i] - inst.mu_on[i]);
  }
  return g;
}

/// Per-arm check that the declared bias bound covers the actual mean shift.
/// Instances that fail here are still runnable; the algorithm is simply
/// operating under a misspecified bound.
inline std::vector<bool> check_validity(const Instance& inst) {
  std::vector<bool> ok(inst.k);
  for (std::size_t i = 0; i < inst.k; ++i)
    ok[i] = inst.v[i].is_unbounded() ||
            inst.v[i].value() >= std::abs(inst.mu_off[i] - inst.mu_on[i]);
  return ok;
}

}  // namespace lucbh
