#include "lucbh/random.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using namespace lucbh;

namespace {

// Known-answer vectors generated with numpy.random.Philox (4x64, 10 rounds).
TEST(Philox, MatchesNumpyZeroKey) {
  Philox4x64 gen(0, 0, {0, 0, 0, 0});
  const auto b0 = gen.next_block();
  EXPECT_EQ(b0[0], 0x02f4ba6408e4d89bULL);
  EXPECT_EQ(b0[1], 0x3dd62b0b9ca8c5b2ULL);
  EXPECT_EQ(b0[2], 0x1c8667a55d902e79ULL);
  EXPECT_EQ(b0[3], 0x907d7a052fd5b4dcULL);
  const auto b1 = gen.next_block();
  EXPECT_EQ(b1[0], 0x809bf322883987c3ULL);
  EXPECT_EQ(b1[1], 0x471128b9e807f7ddULL);
  EXPECT_EQ(b1[2], 0xf250ba0dbec065b7ULL);
  EXPECT_EQ(b1[3], 0xfc6ed66767a457bcULL);
}

TEST(Philox, MatchesNumpyPatternedKey) {
  Philox4x64 gen(0xdeadbeefcafebabeULL, 0x0123456789abcdefULL, {0, 0, 0, 0});
  const auto b = gen.next_block();
  EXPECT_EQ(b[0], 0x8cb02875e6aa71e1ULL);
  EXPECT_EQ(b[1], 0x1f84d1fe706e95a6ULL);
  EXPECT_EQ(b[2], 0x8a6c63d74f29544bULL);
  EXPECT_EQ(b[3], 0x6564077227998747ULL);
}

TEST(Philox, MatchesNumpyTrialDomainCounterLayout) {
  Philox4x64 gen(42, 0, {0, 0, 7, 1});
  const auto b = gen.next_block();
  EXPECT_EQ(b[0], 0x98ebfbb775c2865bULL);
  EXPECT_EQ(b[1], 0x6bcc749c9478d23cULL);
  EXPECT_EQ(b[2], 0x7c442862e0c2347aULL);
  EXPECT_EQ(b[3], 0xf410fdb689ebe9d2ULL);
}

TEST(Philox, CounterCarryMatchesNumpy) {
  const std::uint64_t ff = 0xffffffffffffffffULL;
  Philox4x64 gen(ff, ff, {ff, ff, ff, ff});
  const auto b0 = gen.next_block();
  EXPECT_EQ(b0[0], 0x44b7493d1acfc229ULL);
  EXPECT_EQ(b0[3], 0x605644dde03b01b1ULL);
  const auto b1 = gen.next_block();  // counter wrapped to all-zero
  EXPECT_EQ(b1[0], 0x6d46cc0e71f0be7eULL);
  EXPECT_EQ(b1[1], 0x924ea1693f9a8bc0ULL);
  EXPECT_EQ(b1[2], 0xfdc35f0198c91181ULL);
  EXPECT_EQ(b1[3], 0xb4a311f17aa6568dULL);
}

TEST(GaussianStream, DeterministicPerKey) {
  GaussianStream a(5, 7, stream_domain::online);
  GaussianStream b(5, 7, stream_domain::online);
  for (int i = 0; i < 1000; ++i) EXPECT_EQ(a.draw(0.3), b.draw(0.3));
  GaussianStream c(5, 8, stream_domain::online);
  bool any_diff = false;
  GaussianStream a2(5, 7, stream_domain::online);
  for (int i = 0; i < 16; ++i) any_diff |= a2.draw(0.0) != c.draw(0.0);
  EXPECT_TRUE(any_diff);
}

TEST(GaussianStream, MomentsOfAMillionDraws) {
  GaussianStream g(123, 0, stream_domain::online);
  const int n = 1'000'000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = g.draw(0.0);
    sum += x;
    sumsq += x * x;
  }
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  EXPECT_NEAR(mean, 0.0, 0.005);
  EXPECT_NEAR(var, 1.0, 0.01);

  GaussianStream g2(123, 1, stream_domain::online);
  double sum2 = 0.0;
  for (int i = 0; i < n; ++i) sum2 += g2.draw(0.8);
  EXPECT_NEAR(sum2 / n, 0.8, 0.005);
}

TEST(TrialRng, OfflineConsumptionDoesNotPerturbOnline) {
  TrialRng a(99, 3);
  TrialRng b(99, 3);
  for (int i = 0; i < 500; ++i) (void)a.offline.draw(1.0);  // b draws nothing offline
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.online.draw(0.2), b.online.draw(0.2));
}

TEST(GenerateOffline, EmptyCountsGiveZeroMeans) {
  const Instance inst = make_instance({0.0, -0.1}, {0.0, -0.1}, {0, 0}, {0.0, 0.0}, 0.5);
  TrialRng rng(1, 0);
  const OfflineSummary off = generate_offline(inst, rng);
  EXPECT_EQ(off.x_hat[0], 0.0);
  EXPECT_EQ(off.x_hat[1], 0.0);
}

TEST(GenerateOffline, ConcentratesOnOfflineMean) {
  const Instance inst =
      make_instance({0.8, 0.4}, {0.8, 0.4}, {1'000'000, 0}, {0.0, 0.0}, 0.1);
  TrialRng rng(17, 4);
  const OfflineSummary off = generate_offline(inst, rng);
  EXPECT_NEAR(off.x_hat[0], 0.8, 0.005);
  EXPECT_EQ(off.x_hat[1], 0.0);
}

TEST(GenerateOffline, CountsComeFromTheInstance) {
  const Instance inst = make_instance({0.8, 0.4, 0.4, 0.4, 0.4}, {0.9, 0.2, 0.2, 0.2, 0.2},
                                      {200, 200, 200, 200, 200}, {0.4, 0.2, 0.2, 0.2, 0.2}, 0.01);
  TrialRng rng(1, 0);
  const OfflineSummary off = generate_offline(inst, rng);
  for (std::size_t i = 0; i < inst.k; ++i) EXPECT_EQ(off.t_s[i], 200);
  // 200 draws around 0.9: the empirical mean should land within ~5 sigma.
  EXPECT_NEAR(off.x_hat[0], 0.9, 5.0 / std::sqrt(200.0));
}

TEST(GenerateOffline, DeterministicAcrossRuns) {
  const Instance inst =
      make_instance({0.8, 0.4}, {0.9, 0.2}, {50, 70}, {0.1, 0.2}, 0.1);
  TrialRng r1(2024, 11);
  TrialRng r2(2024, 11);
  const OfflineSummary a = generate_offline(inst, r1);
  const OfflineSummary b = generate_offline(inst, r2);
  EXPECT_EQ(a.x_hat, b.x_hat);
}

}  // namespace
