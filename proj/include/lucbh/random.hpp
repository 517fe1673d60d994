#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "lucbh/core.hpp"

namespace lucbh {

/// Philox-4x64 with 10 rounds, bit-compatible with numpy.random.Philox.
/// Counter-based: the output block is a pure function of (key, counter), so
/// per-trial streams are independent by construction and reproducible under
/// any scheduling.
class Philox4x64 {
 public:
  using Block = std::array<std::uint64_t, 4>;

  Philox4x64(std::uint64_t key0, std::uint64_t key1, Block counter)
      : key_{key0, key1}, counter_(counter) {}

  Block next_block() {
    // 256-bit little-endian increment before encrypting, matching numpy.
    for (auto& limb : counter_)
      if (++limb != 0) break;
    return encrypt(counter_, key_);
  }

  static Block encrypt(Block ctr, std::array<std::uint64_t, 2> key) {
    constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
    constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
    constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
    constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;
    for (int round = 0; round < 10; ++round) {
      const unsigned __int128 p0 = static_cast<unsigned __int128>(kMul0) * ctr[0];
      const unsigned __int128 p1 = static_cast<unsigned __int128>(kMul1) * ctr[2];
      const std::uint64_t hi0 = static_cast<std::uint64_t>(p0 >> 64);
      const std::uint64_t lo0 = static_cast<std::uint64_t>(p0);
      const std::uint64_t hi1 = static_cast<std::uint64_t>(p1 >> 64);
      const std::uint64_t lo1 = static_cast<std::uint64_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return ctr;
  }

 private:
  std::array<std::uint64_t, 2> key_;
  Block counter_;
};

/// Stream of N(mean, 1) draws keyed by (master_seed, trial_index, domain).
/// Distinct domain tags give non-overlapping substreams, so e.g. changing how
/// many offline samples a trial consumes cannot perturb its online draws.
class GaussianStream {
 public:
  GaussianStream(std::uint64_t master_seed, std::uint64_t trial_index, std::uint64_t domain)
      : gen_(master_seed, kKeySalt, Philox4x64::Block{0, 0, trial_index, domain}) {}

  double draw(double mean) { return mean + next_standard_normal(); }

  double next_standard_normal() {
    if (pending_ == 0) refill();
    return cache_[--pending_];
  }

 private:
  // One Philox block -> two uniform pairs -> four normals via Box-Muller.
  void refill() {
    const auto block = gen_.next_block();
    box_muller(block[0], block[1], cache_[3], cache_[2]);
    box_muller(block[2], block[3], cache_[1], cache_[0]);
    pending_ = 4;
  }

  static void box_muller(std::uint64_t w0, std::uint64_t w1, double& z0, double& z1) {
    // u1 in (0,1], u2 in [0,1); 53-bit mantissas.
    const double u1 = (static_cast<double>(w0 >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(w1 >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    z0 = r * std::cos(a);
    z1 = r * std::sin(a);
  }

  // Arbitrary fixed salt for the second key word; seed and stream identity
  // live in the first key word and the counter.
  static constexpr std::uint64_t kKeySalt = 0xB5AD4ECEDA1CE2A9ULL;

  Philox4x64 gen_;
  std::array<double, 4> cache_{};
  int pending_ = 0;
};

namespace stream_domain {
inline constexpr std::uint64_t offline = 1;
inline constexpr std::uint64_t online = 2;
}  // namespace stream_domain

/// All randomness one trial is entitled to. Offline and online substreams are
/// separate; each is a pure function of (master_seed, trial_index).
struct TrialRng {
  std::uint64_t master_seed;
  std::uint64_t trial_index;
  GaussianStream offline;
  GaussianStream online;

  TrialRng(std::uint64_t seed, std::uint64_t trial)
      : master_seed(seed),
        trial_index(trial),
        offline(seed, trial, stream_domain::offline),
        online(seed, trial, stream_domain::online) {}
};

/// Draws the warm-start dataset: t_s[i] samples from N(mu_off[i], 1) per arm,
/// reduced to its empirical mean (0 for arms with no offline data).
inline OfflineSummary generate_offline(const Instance& inst, TrialRng& rng) {
  OfflineSummary off;
  off.t_s = inst.t_s;
  off.x_hat.assign(inst.k, 0.0);
  for (std::size_t i = 0; i < inst.k; ++i) {
    if (inst.t_s[i] == 0) continue;
    double sum = 0.0;
    for (std::int64_t s = 0; s < inst.t_s[i]; ++s) sum += rng.offline.draw(inst.mu_off[i]);
    off.x_hat[i] = sum / static_cast<double>(inst.t_s[i]);
  }
  return off;
}

}  // namespace lucbh
