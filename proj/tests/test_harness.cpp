#include "lucbh/harness.hpp"

#include <gtest/gtest.h>

#include "lucbh/presets.hpp"

using namespace lucbh;

namespace {

Instance tiny_instance(double delta = 0.1) {
  return make_instance({1.5, 0.0}, {1.5, 0.0}, {50, 50}, {0.1, 0.1}, delta);
}

bool same_stats(const PointStats& a, const PointStats& b) {
  return a.mean_tau == b.mean_tau && a.stderr_tau == b.stderr_tau &&
         a.error_rate == b.error_rate && a.mean_pulls == b.mean_pulls &&
         a.truncated == b.truncated && a.trials == b.trials;
}

TEST(RunPoint, BitIdenticalAcrossRunsAndThreadCounts) {
  const Instance inst = tiny_instance();
  const PointStats a = run_point(inst, Algorithm::lucb_h, 64, 7, kDefaultSampleBudget, 1);
  const PointStats b = run_point(inst, Algorithm::lucb_h, 64, 7, kDefaultSampleBudget, 1);
  const PointStats c = run_point(inst, Algorithm::lucb_h, 64, 7, kDefaultSampleBudget, 4);
  EXPECT_TRUE(same_stats(a, b));
  EXPECT_TRUE(same_stats(a, c));
}

TEST(RunPoint, TwoTrialsYieldFiniteStats) {
  const PointStats st = run_point(tiny_instance(), Algorithm::pure_lucb, 2, 3);
  EXPECT_EQ(st.trials, 2u);
  EXPECT_TRUE(std::isfinite(st.mean_tau));
  EXPECT_TRUE(std::isfinite(st.stderr_tau));
  EXPECT_GE(st.stderr_tau, 0.0);
}

TEST(RunPoint, RejectsSingleTrial) {
  EXPECT_THROW(run_point(tiny_instance(), Algorithm::pure_lucb, 1, 3), Error);
}

TEST(RunPoint, TruncatedTrialsAreCountedAndKept) {
  const Instance slow =
      make_instance({0.5, 0.49}, {0.5, 0.49}, {0, 0}, {0.1, 0.1}, 0.01);
  const PointStats st = run_point(slow, Algorithm::pure_lucb, 8, 1, 40);
  EXPECT_EQ(st.truncated, 8);
  EXPECT_LE(st.mean_tau, 40.0);
}

TEST(ApplyAxis, EachAxisTouchesTheRightFields) {
  const Instance base = make_instance({0.8, 0.4, 0.4}, {0.9, 0.2, 0.2}, {100, 100, 100},
                                      {0.4, 0.2, 0.2}, 0.01);
  const Instance d = apply_axis(base, SweepAxis::delta, 0.001);
  EXPECT_DOUBLE_EQ(d.delta, 0.001);
  EXPECT_EQ(d.t_s, base.t_s);

  const Instance t = apply_axis(base, SweepAxis::t_s, 400);
  for (auto ts : t.t_s) EXPECT_EQ(ts, 400);
  EXPECT_DOUBLE_EQ(t.delta, 0.01);

  const Instance vs = apply_axis(base, SweepAxis::v_suboptimal, 0.3);
  EXPECT_EQ(vs.v[0], BiasBound(0.4));  // best arm untouched
  EXPECT_EQ(vs.v[1], BiasBound(0.3));
  EXPECT_EQ(vs.v[2], BiasBound(0.3));

  const Instance va = apply_axis(base, SweepAxis::v_all, 0.15);
  for (const auto& b : va.v) EXPECT_EQ(b, BiasBound(0.15));
}

TEST(ApplyAxis, RejectsBadGridValues) {
  const Instance base = tiny_instance();
  EXPECT_THROW(apply_axis(base, SweepAxis::delta, 1.5), Error);
  EXPECT_THROW(apply_axis(base, SweepAxis::t_s, 2.5), Error);
  EXPECT_THROW(apply_axis(base, SweepAxis::t_s, -1.0), Error);
  EXPECT_THROW(apply_axis(base, SweepAxis::v_all, -0.1), Error);
}

TEST(RunSweep, RowOrderIsGridMajorWithSeriesInSpecOrder) {
  ExperimentSpec spec;
  spec.name = "order";
  spec.base = tiny_instance();
  spec.axis = SweepAxis::delta;
  spec.grid = {0.1, 0.01};
  spec.series = {{"pure", Algorithm::pure_lucb, std::nullopt},
                 {"hist", Algorithm::lucb_h, std::nullopt}};
  spec.trials = 8;
  spec.seed = 5;
  const SweepResult res = run_sweep(spec);
  ASSERT_EQ(res.rows.size(), 4u);
  EXPECT_EQ(res.rows[0].label, "pure");
  EXPECT_EQ(res.rows[1].label, "hist");
  EXPECT_DOUBLE_EQ(res.rows[0].axis_value, 0.1);
  EXPECT_DOUBLE_EQ(res.rows[2].axis_value, 0.01);
  EXPECT_EQ(res.rows[0].algorithm, "pure_lucb");
  EXPECT_EQ(res.rows[1].algorithm, "lucb_h");
}

TEST(RunSweep, SharedTrialStreamsAcrossSeries) {
  // The pure series and a lucb_h series with unbounded bias bounds must see
  // the same online noise, hence identical stopping statistics.
  ExperimentSpec spec;
  spec.name = "crn";
  spec.base = make_instance({1.5, 0.0}, {1.5, 0.0}, {50, 50},
                            {BiasBound::unbounded(), BiasBound::unbounded()}, 0.1);
  spec.axis = SweepAxis::delta;
  spec.grid = {0.1};
  spec.series = {{"pure", Algorithm::pure_lucb, std::nullopt},
                 {"hist", Algorithm::lucb_h, std::nullopt}};
  spec.trials = 32;
  spec.seed = 11;
  const SweepResult res = run_sweep(spec);
  EXPECT_TRUE(same_stats(res.rows[0].stats, res.rows[1].stats));
}

TEST(RunSweep, ConfigValidation) {
  ExperimentSpec spec;
  spec.base = tiny_instance();
  spec.series = {{"pure", Algorithm::pure_lucb, std::nullopt}};
  spec.trials = 8;
  spec.grid = {};
  EXPECT_THROW(run_sweep(spec), Error);
  spec.grid = {0.1};
  spec.trials = 1;
  EXPECT_THROW(run_sweep(spec), Error);
  spec.trials = 8;
  spec.series.clear();
  EXPECT_THROW(run_sweep(spec), Error);
  spec.series = {{"bad", Algorithm::lucb_h, std::vector<double>{1.0, 2.0, 3.0}}};
  EXPECT_THROW(run_sweep(spec), Error);
}

TEST(Presets, CatalogMatchesTheBuilders) {
  for (const auto& info : preset_catalog()) {
    const ExperimentSpec spec = preset(info.name);
    EXPECT_EQ(spec.name, info.name);
    EXPECT_NO_THROW(validate_spec(spec));
    EXPECT_EQ(spec.series.size(), 4u);
    EXPECT_EQ(spec.trials, 1000u);
  }
  EXPECT_THROW(preset("fig99"), Error);
}

TEST(Presets, GridsMatchTheProtocols) {
  EXPECT_EQ(preset("fig1").grid.size(), 6u);
  EXPECT_EQ(preset("fig1", true).grid.size(), 10u);
  EXPECT_DOUBLE_EQ(preset("fig1").grid[1], 0.01);
  EXPECT_EQ(preset("fig3").grid, (std::vector<double>{200, 400, 600, 800, 1000}));
  EXPECT_EQ(preset("fig4").grid, (std::vector<double>{1000, 2000, 3000, 4000, 5000}));
  EXPECT_EQ(preset("fig5").grid, (std::vector<double>{0.2, 0.25, 0.3, 0.35, 0.4}));
  EXPECT_EQ(preset("fig7").grid, (std::vector<double>{0.01}));
  EXPECT_EQ(preset("fig9").grid, (std::vector<double>{0.1, 0.15}));
  EXPECT_EQ(preset("fig10").grid,
            (std::vector<double>{0.1, 0.125, 0.15, 0.175, 0.2, 0.225}));
  EXPECT_EQ(preset("fig9").axis, SweepAxis::v_suboptimal);
  EXPECT_EQ(preset("fig10").axis, SweepAxis::v_all);

  const ExperimentSpec g1 = preset("fig1");
  EXPECT_EQ(g1.base.mu_on, (std::vector<double>{0.8, 0.4, 0.4, 0.4, 0.4}));
  EXPECT_EQ(g1.base.t_s, (std::vector<std::int64_t>(5, 200)));
  const ExperimentSpec g2 = preset("fig2");
  EXPECT_EQ(g2.base.mu_on, (std::vector<double>{0.8, 0.7, 0.6, 0.5, 0.4}));
  EXPECT_EQ(g2.base.t_s, (std::vector<std::int64_t>(5, 1000)));
  // Offline means per series, group 1.
  EXPECT_EQ(*g1.series[1].mu_off, (std::vector<double>{0.4, 0.6, 0.6, 0.6, 0.6}));
  EXPECT_EQ(*g1.series[2].mu_off, (std::vector<double>{0.9, 0.2, 0.2, 0.2, 0.2}));
  EXPECT_EQ(*g1.series[3].mu_off, (std::vector<double>{0.4, 0.6, 0.6, 0.2, 0.2}));
  EXPECT_EQ(*g2.series[1].mu_off, (std::vector<double>{0.4, 0.8, 0.7, 0.6, 0.5}));
  EXPECT_EQ(*g2.series[2].mu_off, (std::vector<double>{0.9, 0.5, 0.4, 0.3, 0.2}));
  EXPECT_EQ(*g2.series[3].mu_off, (std::vector<double>{0.4, 0.8, 0.7, 0.3, 0.2}));
}

}  // namespace
