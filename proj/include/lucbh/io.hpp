#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lucbh/harness.hpp"
#include "lucbh/theory.hpp"
#include "lucbh/version.hpp"

namespace lucbh {

using nlohmann::json;

// ---- instance JSON ---------------------------------------------------------
// Keys: k, mu_on, mu_off, t_s, v, delta. Unbounded bias bounds are encoded as
// the string "inf".

inline json bias_bound_to_json(const BiasBound& b) {
  if (b.is_unbounded()) return json("inf");
  return json(b.value());
}

inline BiasBound bias_bound_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return BiasBound::unbounded();
    fail(Errc::parse_error, "bias bound strings must be \"inf\"");
  }
  if (!j.is_number()) fail(Errc::parse_error, "bias bound must be a number or \"inf\"");
  return BiasBound(j.get<double>());
}

inline json instance_to_json(const Instance& inst) {
  json v = json::array();
  for (const auto& b : inst.v) v.push_back(bias_bound_to_json(b));
  return json{{"k", inst.k},      {"mu_on", inst.mu_on}, {"mu_off", inst.mu_off},
              {"t_s", inst.t_s},  {"v", v},              {"delta", inst.delta}};
}

inline Instance instance_from_json(const json& j) {
  try {
    const std::size_t k = j.at("k").get<std::size_t>();
    auto mu_on = j.at("mu_on").get<std::vector<double>>();
    auto mu_off = j.at("mu_off").get<std::vector<double>>();
    auto t_s = j.at("t_s").get<std::vector<std::int64_t>>();
    std::vector<BiasBound> v;
    for (const auto& e : j.at("v")) v.push_back(bias_bound_from_json(e));
    const double delta = j.at("delta").get<double>();
    if (mu_on.size() != k)
      fail(Errc::parse_error, "field k disagrees with the list lengths");
    return make_instance(std::move(mu_on), std::move(mu_off), std::move(t_s), std::move(v), delta);
  } catch (const json::exception& e) {
    fail(Errc::parse_error, std::string("bad instance document: ") + e.what());
  }
}

// ---- experiment spec JSON ---------------------------------------------------

inline SweepAxis axis_from_string(const std::string& s) {
  if (s == "delta") return SweepAxis::delta;
  if (s == "t_s") return SweepAxis::t_s;
  if (s == "v_suboptimal") return SweepAxis::v_suboptimal;
  if (s == "v_all") return SweepAxis::v_all;
  fail(Errc::parse_error, "unknown sweep axis '" + s + "'");
}

inline Algorithm algorithm_from_string(const std::string& s) {
  if (s == "pure_lucb") return Algorithm::pure_lucb;
  if (s == "lucb_h") return Algorithm::lucb_h;
  fail(Errc::parse_error, "unknown algorithm '" + s + "' (want pure_lucb or lucb_h)");
}

inline json series_to_json(const SeriesSpec& s) {
  json j{{"label", s.label}, {"algorithm", algorithm_name(s.algorithm)}};
  if (s.mu_off) j["mu_off"] = *s.mu_off;
  return j;
}

inline json spec_to_json(const ExperimentSpec& spec) {
  json series = json::array();
  for (const auto& s : spec.series) series.push_back(series_to_json(s));
  return json{{"name", spec.name},     {"instance", instance_to_json(spec.base)},
              {"axis", axis_name(spec.axis)}, {"grid", spec.grid},
              {"series", series},      {"trials", spec.trials},
              {"seed", spec.seed},     {"budget", spec.budget}};
}

inline ExperimentSpec spec_from_json(const json& j) {
  try {
    ExperimentSpec spec;
    spec.name = j.value("name", std::string("run"));
    spec.base = instance_from_json(j.at("instance"));
    spec.axis = axis_from_string(j.at("axis").get<std::string>());
    spec.grid = j.at("grid").get<std::vector<double>>();
    for (const auto& sj : j.at("series")) {
      SeriesSpec s;
      s.algorithm = algorithm_from_string(sj.at("algorithm").get<std::string>());
      s.label = sj.value("label", std::string(algorithm_name(s.algorithm)));
      if (sj.contains("mu_off")) s.mu_off = sj.at("mu_off").get<std::vector<double>>();
      spec.series.push_back(std::move(s));
    }
    if (j.contains("trials")) spec.trials = j.at("trials").get<std::size_t>();
    if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("budget")) spec.budget = j.at("budget").get<std::int64_t>();
    return spec;
  } catch (const json::exception& e) {
    fail(Errc::parse_error, std::string("bad experiment config: ") + e.what());
  }
}

// ---- sweep result CSV / JSON ------------------------------------------------

namespace detail {

inline std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

}  // namespace detail

/// One row per (grid point, series). Header and formatting are fixed so a
/// rerun with the same inputs reproduces the file byte for byte.
inline std::string sweep_to_csv(const SweepResult& res) {
  std::ostringstream out;
  out << "axis,algorithm,case,mean_tau,stderr_tau,error_rate,truncated";
  for (std::size_t i = 1; i <= res.spec.base.k; ++i) out << ",pulls_" << i;
  out << "\n";
  for (const auto& row : res.rows) {
    out << detail::fmt("%.10g", row.axis_value) << ',' << row.algorithm << ',' << row.label << ','
        << detail::fmt("%.6f", row.stats.mean_tau) << ','
        << detail::fmt("%.6f", row.stats.stderr_tau) << ','
        << detail::fmt("%.6f", row.stats.error_rate) << ',' << row.stats.truncated;
    for (const double p : row.stats.mean_pulls) out << ',' << detail::fmt("%.6f", p);
    out << "\n";
  }
  return out.str();
}

inline json sweep_to_json(const SweepResult& res) {
  json rows = json::array();
  for (const auto& row : res.rows) {
    rows.push_back(json{{"axis_value", row.axis_value},
                        {"algorithm", row.algorithm},
                        {"case", row.label},
                        {"mean_tau", row.stats.mean_tau},
                        {"stderr_tau", row.stats.stderr_tau},
                        {"error_rate", row.stats.error_rate},
                        {"truncated", row.stats.truncated},
                        {"mean_pulls", row.stats.mean_pulls},
                        {"trials", row.stats.trials}});
  }
  return json{{"schema_version", kSchemaVersion},
              {"software_version", kVersion},
              {"spec", spec_to_json(res.spec)},
              {"results", rows},
              {"wall_seconds", res.wall_seconds}};
}

inline json bound_report_to_json(const Instance& inst, const BoundReport& rep) {
  json arms = json::array();
  for (std::size_t i = 0; i < inst.k; ++i) {
    json a{{"arm", i + 1},
           {"gap", rep.delta_i[i]},
           {"eta", bias_bound_to_json(rep.eta[i])},
           {"sav_u", rep.sav_u[i] ? json(*rep.sav_u[i]) : json(nullptr)},
           {"sav_l", rep.sav_l[i] ? json(*rep.sav_l[i]) : json(nullptr)},
           {"gap_term", rep.gap[i] ? json(*rep.gap[i]) : json(nullptr)}};
    arms.push_back(std::move(a));
  }
  const char* gap_case = !rep.gap_case                              ? "none"
                         : *rep.gap_case == GapCase::equal_v        ? "equal_v"
                                                                    : "best_arm_unbiased";
  return json{{"schema_version", kSchemaVersion},
              {"software_version", kVersion},
              {"instance", instance_to_json(inst)},
              {"best_arm", inst.best_arm + 1},
              {"arms", arms},
              {"gap_case", gap_case},
              {"upper_bound_total", rep.upper_bound_total},
              {"lower_bound_total", rep.lower_bound_total},
              {"lucb_reference", rep.lucb_reference},
              {"batch_ts_reference", rep.batch_ts_reference}};
}

// ---- file helpers -----------------------------------------------------------

inline void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot open '" + path + "' for writing");
  out << contents;
  if (!out) fail(Errc::io_error, "failed writing '" + path + "'");
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json parse_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    fail(Errc::parse_error, "invalid JSON in '" + path + "': " + e.what());
  }
}

}  // namespace lucbh
