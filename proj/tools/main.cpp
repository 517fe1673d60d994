#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "lucbh/io.hpp"
#include "lucbh/presets.hpp"
#include "lucbh/svg.hpp"

namespace fs = std::filesystem;
using namespace lucbh;

namespace {

struct CommonOpts {
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::optional<std::int64_t> budget;
  bool emit_svg = false;
  bool full_grid = false;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

void ensure_out_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) fail(Errc::io_error, "cannot create output directory '" + dir + "'");
}

std::string axis_display_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::delta: return "log10(1/delta)";
    case SweepAxis::t_s: return "offline samples per arm";
    case SweepAxis::v_suboptimal: return "bias bound on suboptimal arms";
    case SweepAxis::v_all: return "shared bias bound";
  }
  return "";
}

std::string sweep_to_svg(const SweepResult& res) {
  const auto& spec = res.spec;
  if (spec.grid.size() == 1) {
    // Allocation snapshot: per-arm mean pulls, one bar group per arm.
    std::vector<std::string> groups;
    for (std::size_t i = 1; i <= spec.base.k; ++i) groups.push_back("arm " + std::to_string(i));
    std::vector<std::pair<std::string, std::vector<double>>> bars;
    for (const auto& row : res.rows) bars.emplace_back(row.label, row.stats.mean_pulls);
    char title[128];
    std::snprintf(title, sizeof(title), "%s: mean pulls per arm (delta=%g)", spec.name.c_str(),
                  spec.grid[0]);
    return svg_bar_chart(title, "mean pulls", groups, bars);
  }

  const bool log_x = spec.axis == SweepAxis::delta;
  const auto tx = [&](double v) { return log_x ? std::log10(1.0 / v) : v; };
  std::vector<ChartSeries> series;
  for (const auto& s : spec.series) {
    ChartSeries cs;
    cs.label = s.label;
    for (const auto& row : res.rows) {
      if (row.label != s.label) continue;
      cs.x.push_back(tx(row.axis_value));
      cs.y.push_back(row.stats.mean_tau);
      cs.err.push_back(row.stats.stderr_tau);
    }
    series.push_back(std::move(cs));
  }
  std::vector<std::pair<double, std::string>> ticks;
  for (double g : spec.grid) {
    char label[48];
    std::snprintf(label, sizeof(label), "%.6g", g);
    ticks.emplace_back(tx(g), label);
  }
  return svg_line_chart(spec.name + ": mean stopping time vs " + axis_name(spec.axis),
                        axis_display_name(spec.axis), "mean stopping time", series, ticks);
}

void apply_overrides(ExperimentSpec& spec, const CommonOpts& opts) {
  if (opts.seed) spec.seed = *opts.seed;
  if (opts.trials) spec.trials = *opts.trials;
  if (opts.budget) spec.budget = *opts.budget;
}

void execute_sweep(ExperimentSpec spec, const CommonOpts& opts) {
  apply_overrides(spec, opts);
  ensure_out_dir(opts.out_dir);
  const SweepResult res = run_sweep(spec, opts.threads);
  const std::string base = (fs::path(opts.out_dir) / spec.name).string();
  write_file(base + ".csv", sweep_to_csv(res));
  write_file(base + ".json", sweep_to_json(res).dump(2) + "\n");
  if (opts.emit_svg) write_file(base + ".svg", sweep_to_svg(res));
  std::printf("%s: %zu points x %zu series, %zu trials each (%.1fs)\n", spec.name.c_str(),
              spec.grid.size(), spec.series.size(), spec.trials, res.wall_seconds);
  for (const auto& row : res.rows)
    std::printf("  %s=%-8g %-10s %-11s mean_tau=%10.1f +- %6.1f  err=%.4f%s\n",
                axis_name(spec.axis), row.axis_value, row.algorithm.c_str(), row.label.c_str(),
                row.stats.mean_tau, row.stats.stderr_tau, row.stats.error_rate,
                row.stats.truncated ? "  [has truncated trials]" : "");
  std::printf("wrote %s.csv / .json%s\n", base.c_str(), opts.emit_svg ? " / .svg" : "");
}

void cmd_bounds(const std::string& instance_path, const CommonOpts& opts) {
  const Instance inst = instance_from_json(parse_json_file(instance_path));
  const BoundReport rep = make_bound_report(inst);
  std::printf("best arm: %zu\n", inst.best_arm + 1);
  std::printf("%-5s %10s %10s %12s %12s %12s\n", "arm", "gap", "eta", "sav_u", "sav_l",
              "gap_term");
  for (std::size_t i = 0; i < inst.k; ++i) {
    char eta[32], su[32], sl[32], gp[32];
    if (rep.eta[i].is_unbounded())
      std::snprintf(eta, sizeof(eta), "%s", "inf");
    else
      std::snprintf(eta, sizeof(eta), "%.4f", rep.eta[i].value());
    const auto opt = [](const std::optional<double>& o, char* buf, std::size_t sz) {
      if (o)
        std::snprintf(buf, sz, "%.4f", *o);
      else
        std::snprintf(buf, sz, "%s", "-");
    };
    opt(rep.sav_u[i], su, sizeof(su));
    opt(rep.sav_l[i], sl, sizeof(sl));
    opt(rep.gap[i], gp, sizeof(gp));
    std::printf("%-5zu %10.4f %10s %12s %12s %12s\n", i + 1, rep.delta_i[i], eta, su, sl, gp);
  }
  std::printf("upper_bound_total    %12.4f\n", rep.upper_bound_total);
  std::printf("lower_bound_total    %12.4f\n", rep.lower_bound_total);
  std::printf("lucb_reference       %12.4f\n", rep.lucb_reference);
  std::printf("batch_ts_reference   %12.4f\n", rep.batch_ts_reference);

  ensure_out_dir(opts.out_dir);
  const std::string out =
      (fs::path(opts.out_dir) / (fs::path(instance_path).stem().string() + ".bounds.json"))
          .string();
  write_file(out, bound_report_to_json(inst, rep).dump(2) + "\n");
  std::printf("wrote %s\n", out.c_str());
}

void cmd_impossibility(double beta, double epsilon, double c, double delta, double v,
                       std::size_t trials, const CommonOpts& opts) {
  ImpossibilityPair pair = build_impossibility_pair(beta, epsilon, c, delta);
  const std::uint64_t seed = opts.seed.value_or(1);
  const std::int64_t budget = opts.budget.value_or(kDefaultSampleBudget);
  const std::size_t n = opts.trials.value_or(trials);

  json rows = json::array();
  std::printf("instance_p: on=(0, %.6g) off=on      best arm 1\n", pair.instance_p.mu_on[1]);
  std::printf("instance_q: on=(0, %.6g) off(2)=%.6g best arm 2\n", pair.instance_q.mu_on[1],
              pair.instance_q.mu_off[1]);
  std::printf("%-12s %-10s %12s %10s %8s\n", "instance", "algorithm", "mean_tau", "stderr",
              "err");
  for (const auto& [label, inst] :
       {std::pair<const char*, const Instance*>{"instance_p", &pair.instance_p},
        std::pair<const char*, const Instance*>{"instance_q", &pair.instance_q}}) {
    for (Algorithm algo : {Algorithm::lucb_h, Algorithm::pure_lucb}) {
      const Instance run_inst =
          algo == Algorithm::lucb_h ? with_bias_bound(*inst, BiasBound(v)) : *inst;
      const PointStats st = run_point(run_inst, algo, n, seed, budget, opts.threads);
      std::printf("%-12s %-10s %12.1f %10.1f %8.4f%s\n", label, algorithm_name(algo),
                  st.mean_tau, st.stderr_tau, st.error_rate,
                  st.truncated ? "  [has truncated trials]" : "");
      rows.push_back(json{{"instance", label},
                          {"algorithm", algorithm_name(algo)},
                          {"v", v},
                          {"mean_tau", st.mean_tau},
                          {"stderr_tau", st.stderr_tau},
                          {"error_rate", st.error_rate},
                          {"truncated", st.truncated},
                          {"mean_pulls", st.mean_pulls}});
    }
  }
  ensure_out_dir(opts.out_dir);
  const json doc{{"schema_version", kSchemaVersion},
                 {"software_version", kVersion},
                 {"beta", beta},
                 {"epsilon", epsilon},
                 {"c", c},
                 {"delta", delta},
                 {"v", v},
                 {"trials", n},
                 {"seed", seed},
                 {"instance_p", instance_to_json(pair.instance_p)},
                 {"instance_q", instance_to_json(pair.instance_q)},
                 {"results", rows}};
  const std::string out = (fs::path(opts.out_dir) / "impossibility.json").string();
  write_file(out, doc.dump(2) + "\n");
  std::printf("wrote %s\n", out.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Best-arm identification with possibly biased offline data: "
               "LUCB-H simulations, sweeps and bound calculators"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may appear after the subcommand

  CommonOpts opts;
  const char* env_out = std::getenv("BAI_OUT");
  opts.out_dir = env_out ? env_out : ".";
  app.add_option("--out,-o", opts.out_dir, "output directory (default: $BAI_OUT or .)");
  std::uint64_t seed_flag = 0;
  auto* seed_opt = app.add_option("--seed", seed_flag, "master seed");
  std::size_t trials_flag = 0;
  auto* trials_opt = app.add_option("--trials", trials_flag, "trials per grid point");
  std::int64_t budget_flag = 0;
  auto* budget_opt = app.add_option("--budget", budget_flag, "max online samples per trial");
  app.add_flag("--emit-svg", opts.emit_svg, "also write an .svg chart");
  app.add_flag("--full-grid", opts.full_grid, "use the full delta grid down to 0.1^10");
  app.add_option("--threads", opts.threads, "worker threads (default: hardware)");

  auto* preset_cmd = app.add_subcommand("preset", "run a canned experiment");
  std::string preset_name;
  preset_cmd->add_option("name", preset_name, "preset name (see list-presets)")->required();

  auto* run_cmd = app.add_subcommand("run", "run an experiment from a JSON config");
  std::string config_path;
  run_cmd->add_option("--config,config", config_path, "experiment config JSON")->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate bound formulas for an instance");
  std::string instance_path;
  bounds_cmd->add_option("instance", instance_path, "instance JSON file")->required();

  auto* imp_cmd = app.add_subcommand("impossibility",
                                     "build the helpful/misleading instance pair and compare "
                                     "both policies on it");
  double beta = 0.5, epsilon = 0.1, c = 1.0, delta = 0.1, v = 0.0;
  std::size_t imp_trials = 1000;
  imp_cmd->add_option("--beta", beta, "gap exponent (default 0.5)");
  imp_cmd->add_option("--epsilon", epsilon, "slack exponent (default 0.1)");
  imp_cmd->add_option("--c", c, "scale constant (default 1)");
  imp_cmd->add_option("--delta", delta, "confidence parameter (default 0.1)");
  imp_cmd->add_option("--v", v, "bias bound handed to the history-aware policy (default 0)");
  imp_cmd->add_option("--trials", imp_trials, "trials per cell (default 1000)");

  auto* list_cmd = app.add_subcommand("list-presets", "list preset names");

  CLI11_PARSE(app, argc, argv);
  if (seed_opt->count()) opts.seed = seed_flag;
  if (trials_opt->count()) opts.trials = trials_flag;
  if (budget_opt->count()) opts.budget = budget_flag;

  try {
    if (*list_cmd) {
      for (const auto& p : preset_catalog()) std::printf("%-7s %s\n", p.name.c_str(),
                                                         p.description.c_str());
    } else if (*preset_cmd) {
      execute_sweep(preset(preset_name, opts.full_grid), opts);
    } else if (*run_cmd) {
      execute_sweep(spec_from_json(parse_json_file(config_path)), opts);
    } else if (*bounds_cmd) {
      cmd_bounds(instance_path, opts);
    } else if (*imp_cmd) {
      cmd_impossibility(beta, epsilon, c, delta, v, imp_trials, opts);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
