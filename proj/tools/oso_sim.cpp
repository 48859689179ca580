// Batch front-end: oso_sim <single-rb|throughput|outage|asymptotic> [options]
//
// Exit status: 0 success, 1 usage error, 2 config error, 3 runtime failure.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oso/oso.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Opportunistic MTD scheduling simulator"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_dir = "out";
  std::uint64_t seed = 0;
  std::size_t drops = 0;
  std::vector<std::size_t> k_values;
  std::vector<double> powers;
  std::string power_mode;
  std::string layout = "iid";
  std::size_t workers = 0;

  app.add_option("--config", config_path, "key = value config file (defaults when omitted)");
  auto* seed_opt = app.add_option("--seed", seed, "64-bit RNG seed");
  app.add_option("--out", out_dir, "output directory")->capture_default_str();
  auto* drops_opt = app.add_option("--drops", drops, "Monte Carlo drops (samples for asymptotic)")
                        ->check(CLI::PositiveNumber);
  app.add_option("--k-values", k_values, "comma separated MTD counts")->delimiter(',');
  app.add_option("--mtd-power-dbm", powers, "comma separated fixed MTD powers [dBm]")->delimiter(',');
  app.add_option("--power-mode", power_mode, "fixed | controlled")->check(CLI::IsMember({"fixed", "controlled"}));
  app.add_option("--workers", workers, "worker threads (0: all cores)");

  std::vector<CLI::App*> subs;
  subs.push_back(app.add_subcommand("single-rb", "cellular SINR on one shared RB vs K and MTD power"));
  subs.push_back(app.add_subcommand("throughput", "CU throughput on all RBs with greedy matching"));
  subs.push_back(app.add_subcommand("outage", "Monte Carlo outage probability vs K"));
  auto* asym = app.add_subcommand("asymptotic", "P(best candidate meets the interference threshold) vs K");
  asym->add_option("--layout", layout, "iid | fixed candidate placement")
      ->check(CLI::IsMember({"iid", "fixed"}))
      ->capture_default_str();
  subs.push_back(asym);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const auto experiment = oso::experiment_from_string(app.get_subcommands().front()->get_name());
  oso::RunOverrides overrides;
  if (*seed_opt) overrides.seed = seed;
  if (*drops_opt) overrides.drops = drops;
  overrides.k_values = k_values;
  overrides.mtd_power_dbm = powers;
  if (!power_mode.empty()) overrides.power_mode = oso::power_mode_from_string(power_mode);
  overrides.layout = layout == "fixed" ? oso::CandidateLayout::kFixed : oso::CandidateLayout::kIid;
  overrides.workers = workers;

  oso::SimConfig config;
  try {
    if (!config_path.empty()) config = oso::parse_config(config_path);
  } catch (const oso::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    const auto manifest = oso::run(*experiment, config, overrides, out_dir);
    for (const auto& a : manifest.artifacts) std::cout << out_dir << '/' << a << '\n';
  } catch (const oso::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return 0;
}
