#ifndef OSO_UNITS_HPP
#define OSO_UNITS_HPP

#include <cmath>

namespace oso {

// Linear arithmetic everywhere inside the library; dB only at the edges.

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double ratio) { return 10.0 * std::log10(ratio); }

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

inline double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

/// Thermal noise power over one resource block, including the receiver noise figure.
inline double noise_power_dbm(double psd_dbm_hz, double bandwidth_hz, double noise_figure_db) {
  return psd_dbm_hz + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

}  // namespace oso

#endif  // OSO_UNITS_HPP
