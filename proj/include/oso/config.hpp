#ifndef OSO_CONFIG_HPP
#define OSO_CONFIG_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "oso/errors.hpp"
#include "oso/units.hpp"

namespace oso {

enum class PowerMode { kFixed, kControlled };

inline std::string_view to_string(PowerMode mode) {
  return mode == PowerMode::kFixed ? "fixed" : "controlled";
}

inline std::optional<PowerMode> power_mode_from_string(std::string_view s) {
  if (s == "fixed") return PowerMode::kFixed;
  if (s == "controlled") return PowerMode::kControlled;
  return std::nullopt;
}

/// Every knob of the uplink sharing simulation. Defaults reproduce the
/// reference LTE scenario (4 BS antennas, 500 m cell, 20 RBs of 180 kHz,
/// 2 dB noise figure, -174 dBm/Hz, 10 dB CU target).
///
/// Values are held in the units named by the field; the accessors below
/// give the linear quantities used by the physics.
struct SimConfig {
  std::size_t antennas = 4;
  double cell_radius_m = 500.0;
  double mta_cluster_radius_m = 250.0;
  std::size_t n_rb = 20;
  double noise_figure_db = 2.0;
  double noise_psd_dbm_hz = -174.0;
  double rb_bandwidth_hz = 180e3;
  double cu_target_sinr_db = 10.0;
  PowerMode mtd_power_mode = PowerMode::kFixed;
  double mtd_fixed_power_dbm = 0.0;
  double mtd_target_sinr_db = 10.0;
  double p_max_dbm = 23.0;
  // Background interference at the MTA; unset means "equal to the noise power".
  std::optional<double> i0_dbm;
  std::size_t k = 1000;
  std::size_t n_drops = 10000;
  std::uint64_t seed = 1;
  double min_distance_m = 10.0;
  double cu_mta_exclusion_m = 100.0;
  double delta_th_db = 9.0;
  // Interference threshold; unset means "the level that puts an uncapped
  // CU exactly at delta_th".
  std::optional<double> delta_i_dbm;

  bool operator==(const SimConfig&) const = default;

  double noise_dbm() const {
    return noise_power_dbm(noise_psd_dbm_hz, rb_bandwidth_hz, noise_figure_db);
  }
  double noise_watts() const { return dbm_to_watts(noise_dbm()); }
  double i0_watts() const { return i0_dbm ? dbm_to_watts(*i0_dbm) : noise_watts(); }
  double p_max_watts() const { return dbm_to_watts(p_max_dbm); }
  double mtd_fixed_power_watts() const { return dbm_to_watts(mtd_fixed_power_dbm); }
  double cu_target_sinr() const { return db_to_linear(cu_target_sinr_db); }
  double mtd_target_sinr() const { return db_to_linear(mtd_target_sinr_db); }
  double delta_th() const { return db_to_linear(delta_th_db); }

  double delta_i_watts() const {
    if (delta_i_dbm) return dbm_to_watts(*delta_i_dbm);
    // SINR_target * N0 / (I + N0) = delta_th  =>  I = N0 (target / delta_th - 1)
    return noise_watts() * (cu_target_sinr() / delta_th() - 1.0);
  }
};

/// Throws ConfigError naming the first violated constraint.
inline void validate(const SimConfig& c) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw ConfigError(what);
  };
  auto finite = [](double v) { return std::isfinite(v); };
  require(c.antennas >= 1, "antennas must be >= 1");
  require(c.n_rb >= 1, "n_rb must be >= 1");
  require(c.k >= 1, "k must be >= 1");
  require(c.n_drops >= 1, "n_drops must be >= 1");
  require(finite(c.cell_radius_m) && c.cell_radius_m > 0.0, "cell_radius_m must be > 0");
  require(finite(c.mta_cluster_radius_m) && c.mta_cluster_radius_m >= 0.0,
          "mta_cluster_radius_m must be >= 0");
  require(finite(c.min_distance_m) && c.min_distance_m > 0.0, "min_distance_m must be > 0");
  require(c.min_distance_m < c.cell_radius_m, "min_distance_m must be below cell_radius_m");
  require(finite(c.cu_mta_exclusion_m) && c.cu_mta_exclusion_m >= 0.0,
          "cu_mta_exclusion_m must be >= 0");
  require(c.cu_mta_exclusion_m <= 2.0 * c.cell_radius_m,
          "cu_mta_exclusion_m leaves no room for the cellular user");
  require(finite(c.rb_bandwidth_hz) && c.rb_bandwidth_hz > 0.0, "rb_bandwidth_hz must be > 0");
  require(finite(c.noise_figure_db) && finite(c.noise_psd_dbm_hz), "noise parameters must be finite");
  require(finite(c.cu_target_sinr_db) && finite(c.mtd_target_sinr_db), "target SINRs must be finite");
  require(finite(c.delta_th_db), "delta_th_db must be finite");
  // Powers may be -inf dBm (switched off) but never +inf or NaN.
  auto power_ok = [](double dbm) { return !std::isnan(dbm) && dbm < INFINITY; };
  require(power_ok(c.mtd_fixed_power_dbm), "mtd_fixed_power_dbm must be < +inf");
  require(power_ok(c.p_max_dbm), "p_max_dbm must be < +inf");
  require(!c.i0_dbm || power_ok(*c.i0_dbm), "i0_dbm must be < +inf");
  require(!c.delta_i_dbm || power_ok(*c.delta_i_dbm), "delta_i_dbm must be < +inf");
}

}  // namespace oso

#endif  // OSO_CONFIG_HPP
