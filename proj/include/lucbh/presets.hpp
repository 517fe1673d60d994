#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lucbh/harness.hpp"

namespace lucbh {

// Canned experiment grids over two five-armed Gaussian instances: group 1 has
// a staircase mean profile, group 2 a linear one. Each sweep carries four
// series: the online-only baseline plus the history-aware policy under
// misleading, beneficial and partially helpful offline means.

namespace presets {

inline const std::vector<double> kOnG1 = {0.8, 0.4, 0.4, 0.4, 0.4};
inline const std::vector<double> kOnG2 = {0.8, 0.7, 0.6, 0.5, 0.4};

inline const std::vector<double> kOffMisleadingG1 = {0.4, 0.6, 0.6, 0.6, 0.6};
inline const std::vector<double> kOffBeneficialG1 = {0.9, 0.2, 0.2, 0.2, 0.2};
inline const std::vector<double> kOffPartialG1 = {0.4, 0.6, 0.6, 0.2, 0.2};

inline const std::vector<double> kOffMisleadingG2 = {0.4, 0.8, 0.7, 0.6, 0.5};
inline const std::vector<double> kOffBeneficialG2 = {0.9, 0.5, 0.4, 0.3, 0.2};
inline const std::vector<double> kOffPartialG2 = {0.4, 0.8, 0.7, 0.3, 0.2};

inline const std::vector<BiasBound> kDefaultV = {0.4, 0.2, 0.2, 0.2, 0.2};

inline std::vector<SeriesSpec> standard_series(int group) {
  const bool g1 = group == 1;
  return {
      {"pure", Algorithm::pure_lucb, std::nullopt},
      {"misleading", Algorithm::lucb_h, g1 ? kOffMisleadingG1 : kOffMisleadingG2},
      {"beneficial", Algorithm::lucb_h, g1 ? kOffBeneficialG1 : kOffBeneficialG2},
      {"partial", Algorithm::lucb_h, g1 ? kOffPartialG1 : kOffPartialG2},
  };
}

inline Instance base_instance(int group, std::int64_t t_s, double delta) {
  const auto& on = group == 1 ? kOnG1 : kOnG2;
  // The base carries the beneficial offline means; each series overrides them.
  const auto& off = group == 1 ? kOffBeneficialG1 : kOffBeneficialG2;
  return make_instance(on, off, std::vector<std::int64_t>(5, t_s), kDefaultV, delta);
}

inline std::vector<double> delta_grid(bool full) {
  std::vector<double> g;
  double d = 1.0;
  for (int e = 1; e <= (full ? 10 : 6); ++e) {
    d *= 0.1;
    g.push_back(d);
  }
  return g;
}

}  // namespace presets

struct PresetInfo {
  std::string name;
  std::string description;
};

inline std::vector<PresetInfo> preset_catalog() {
  return {
      {"fig1", "group 1: mean stopping time vs delta (0.1^1..0.1^6; --full-grid: ..0.1^10)"},
      {"fig2", "group 2: mean stopping time vs delta"},
      {"fig3", "group 1: mean stopping time vs offline sample count {200..1000}"},
      {"fig4", "group 2: mean stopping time vs offline sample count {1000..5000}"},
      {"fig5", "group 1: mean stopping time vs suboptimal-arm bias bound [0.2..0.4]"},
      {"fig6", "group 2: mean stopping time vs suboptimal-arm bias bound [0.2..0.4]"},
      {"fig7", "group 1: per-arm allocation at delta=0.01"},
      {"fig8", "group 2: per-arm allocation at delta=0.01"},
      {"fig9", "group 2: underestimated suboptimal bias bound {0.1, 0.15} (true shift 0.2)"},
      {"fig10", "group 2: one shared bias bound for all arms {0.1..0.225}"},
  };
}

/// Exact grid/instance configuration behind each preset name.
inline ExperimentSpec preset(std::string_view name, bool full_grid = false) {
  using namespace presets;
  ExperimentSpec spec;
  spec.name = std::string(name);
  spec.trials = 1000;
  spec.seed = 1;

  if (name == "fig1" || name == "fig2") {
    const int g = name == "fig1" ? 1 : 2;
    spec.base = base_instance(g, g == 1 ? 200 : 1000, 0.01);
    spec.axis = SweepAxis::delta;
    spec.grid = delta_grid(full_grid);
    spec.series = standard_series(g);
  } else if (name == "fig3" || name == "fig4") {
    const int g = name == "fig3" ? 1 : 2;
    spec.base = base_instance(g, g == 1 ? 200 : 1000, 0.01);
    spec.axis = SweepAxis::t_s;
    spec.grid = g == 1 ? std::vector<double>{200, 400, 600, 800, 1000}
                       : std::vector<double>{1000, 2000, 3000, 4000, 5000};
    spec.series = standard_series(g);
  } else if (name == "fig5" || name == "fig6") {
    const int g = name == "fig5" ? 1 : 2;
    spec.base = base_instance(g, 200, 0.01);
    spec.axis = SweepAxis::v_suboptimal;
    spec.grid = {0.2, 0.25, 0.3, 0.35, 0.4};
    spec.series = standard_series(g);
  } else if (name == "fig7" || name == "fig8") {
    const int g = name == "fig7" ? 1 : 2;
    spec.base = base_instance(g, g == 1 ? 200 : 1000, 0.01);
    spec.axis = SweepAxis::delta;
    spec.grid = {0.01};
    spec.series = standard_series(g);
  } else if (name == "fig9") {
    spec.base = base_instance(2, 200, 0.01);
    spec.axis = SweepAxis::v_suboptimal;
    spec.grid = {0.1, 0.15};
    spec.series = standard_series(2);
  } else if (name == "fig10") {
    spec.base = base_instance(2, 200, 0.01);
    spec.axis = SweepAxis::v_all;
    spec.grid = {0.1, 0.125, 0.15, 0.175, 0.2, 0.225};
    spec.series = standard_series(2);
  } else {
    fail(Errc::unknown_preset, "unknown preset '" + std::string(name) + "'");
  }
  return spec;
}

}  // namespace lucbh
