#ifndef OSO_RUNNER_HPP
#define OSO_RUNNER_HPP

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "oso/config.hpp"
#include "oso/config_io.hpp"
#include "oso/montecarlo.hpp"
#include "oso/report.hpp"

namespace oso {

enum class Experiment { kSingleRb, kThroughput, kOutage, kAsymptotic };

inline std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::kSingleRb: return "single-rb";
    case Experiment::kThroughput: return "throughput";
    case Experiment::kOutage: return "outage";
    case Experiment::kAsymptotic: return "asymptotic";
  }
  return "";
}

inline std::optional<Experiment> experiment_from_string(std::string_view s) {
  for (auto e : {Experiment::kSingleRb, Experiment::kThroughput, Experiment::kOutage, Experiment::kAsymptotic}) {
    if (to_string(e) == s) return e;
  }
  return std::nullopt;
}

/// Command-line adjustments layered on top of the config file.
struct RunOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> drops;
  std::vector<std::size_t> k_values;
  std::vector<double> mtd_power_dbm;
  std::optional<PowerMode> power_mode;
  CandidateLayout layout = CandidateLayout::kIid;
  std::size_t workers = 0;
};

struct RunManifest {
  std::string experiment;
  SimConfig config;
  std::uint64_t seed = 0;
  std::vector<std::string> artifacts;
  double wall_clock_seconds = 0.0;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["experiment"] = experiment;
    j["seed"] = seed;
    j["config"] = serialize_config(config);
    j["artifacts"] = artifacts;
    j["wall_clock_seconds"] = wall_clock_seconds;
    return j;
  }
};

inline std::vector<std::size_t> default_k_values(Experiment e) {
  switch (e) {
    case Experiment::kThroughput: return {20, 50, 100, 200, 500, 1000};
    case Experiment::kAsymptotic: return {1, 2, 5, 10, 100, 1000};
    default: return {1, 10, 100, 1000};
  }
}

/// Runs one experiment and writes its CSVs plus manifest.json into out_dir.
/// On failure every file written so far is removed before rethrowing.
inline RunManifest run(Experiment experiment, SimConfig config, const RunOverrides& overrides,
                       const std::filesystem::path& out_dir) {
  const auto start = std::chrono::steady_clock::now();
  if (overrides.seed) config.seed = *overrides.seed;
  if (overrides.drops) config.n_drops = *overrides.drops;
  if (overrides.power_mode) config.mtd_power_mode = *overrides.power_mode;
  validate(config);
  const auto k_values = overrides.k_values.empty() ? default_k_values(experiment) : overrides.k_values;
  const ExperimentOptions options{overrides.workers};

  RunManifest manifest;
  manifest.experiment = std::string(to_string(experiment));
  manifest.config = config;
  manifest.seed = config.seed;

  std::vector<std::filesystem::path> written;
  auto write = [&](const std::string& name, const std::string& text) {
    const auto path = out_dir / name;
    written.push_back(path);
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + path.string());
    manifest.artifacts.push_back(name);
  };

  try {
    std::filesystem::create_directories(out_dir);
    switch (experiment) {
      case Experiment::kSingleRb: {
        const auto s = experiment_single_rb(config, k_values, overrides.mtd_power_dbm, options);
        write("single-rb.csv", single_rb_csv(s));
        break;
      }
      case Experiment::kThroughput: {
        const auto s = experiment_throughput(config, k_values, options);
        write("throughput.csv", throughput_csv(s.rows));
        write("throughput_baseline.csv", throughput_csv(s.baseline_rows));
        break;
      }
      case Experiment::kOutage: {
        const double power[] = {config.mtd_fixed_power_dbm};
        const auto s = experiment_single_rb(config, k_values, power, options);
        write("outage.csv", outage_csv(s, config.delta_th_db));
        break;
      }
      case Experiment::kAsymptotic: {
        const auto a = verify_asymptotic(config, k_values, config.delta_i_watts(), overrides.layout, config.n_drops,
                                         options);
        write("asymptotic.csv", asymptotic_csv(a));
        break;
      }
    }
    manifest.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    manifest.artifacts.push_back("manifest.json");
    const auto path = out_dir / "manifest.json";
    written.push_back(path);
    std::ofstream out(path, std::ios::binary);
    out << manifest.to_json().dump(2) << '\n';
    if (!out) throw std::runtime_error("cannot write " + path.string());
  } catch (...) {
    std::error_code ec;
    for (const auto& p : written) std::filesystem::remove(p, ec);
    throw;
  }
  return manifest;
}

}  // namespace oso

#endif  // OSO_RUNNER_HPP
