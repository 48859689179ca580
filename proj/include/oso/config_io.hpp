#ifndef OSO_CONFIG_IO_HPP
#define OSO_CONFIG_IO_HPP

#include <array>
#include <cctype>
#include <cmath>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>

#include "oso/config.hpp"
#include "oso/errors.hpp"

namespace oso {

// Config files are line oriented:
//
//   # comment
//   antennas = 4
//   cell_radius_m = 0.5 km
//   p_max_dbm = 200 mW
//   i0_dbm = auto
//
// Unknown keys, repeated keys and malformed lines are rejected with the
// line number. Missing keys keep their defaults.

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// Full-string double parse (accepts inf / -inf).
inline std::optional<double> parse_double(std::string_view s) {
  double v = 0.0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

inline std::optional<std::uint64_t> parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

/// Splits "12.5 kHz" into ("12.5", "kHz"). The unit may be glued ("12.5kHz").
inline std::pair<std::string_view, std::string_view> split_unit(std::string_view value) {
  const auto space = value.find_first_of(" \t");
  if (space != std::string_view::npos) return {trim(value.substr(0, space)), trim(value.substr(space))};
  std::size_t i = value.size();
  while (i > 0 && (std::isalpha(static_cast<unsigned char>(value[i - 1])) || value[i - 1] == '/')) --i;
  std::string_view number = value.substr(0, i);
  std::string_view unit = value.substr(i);
  // "inf" and "-inf" are numbers, not units.
  if (number.empty() || number == "-" || number == "+") return {value, {}};
  return {number, unit};
}

inline std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

enum class Quantity { kCount, kSeed, kLength, kDecibel, kPowerDbm, kPsd, kFrequency, kMode };

struct KeySpec {
  Quantity quantity;
  bool optional_auto = false;
};

inline const std::map<std::string, KeySpec, std::less<>>& key_specs() {
  static const std::map<std::string, KeySpec, std::less<>> specs = {
      {"antennas", {Quantity::kCount}},
      {"cell_radius_m", {Quantity::kLength}},
      {"mta_cluster_radius_m", {Quantity::kLength}},
      {"n_rb", {Quantity::kCount}},
      {"noise_figure_db", {Quantity::kDecibel}},
      {"noise_psd_dbm_hz", {Quantity::kPsd}},
      {"rb_bandwidth_hz", {Quantity::kFrequency}},
      {"cu_target_sinr_db", {Quantity::kDecibel}},
      {"mtd_power_mode", {Quantity::kMode}},
      {"mtd_fixed_power_dbm", {Quantity::kPowerDbm}},
      {"mtd_target_sinr_db", {Quantity::kDecibel}},
      {"p_max_dbm", {Quantity::kPowerDbm}},
      {"i0_dbm", {Quantity::kPowerDbm, true}},
      {"k", {Quantity::kCount}},
      {"n_drops", {Quantity::kCount}},
      {"seed", {Quantity::kSeed}},
      {"min_distance_m", {Quantity::kLength}},
      {"cu_mta_exclusion_m", {Quantity::kLength}},
      {"delta_th_db", {Quantity::kDecibel}},
      {"delta_i_dbm", {Quantity::kPowerDbm, true}},
  };
  return specs;
}

/// Converts a number with an optional unit to the key's canonical unit.
inline std::optional<double> to_canonical(Quantity q, double v, std::string_view unit) {
  switch (q) {
    case Quantity::kLength:
      if (unit.empty() || unit == "m") return v;
      if (unit == "km") return v * 1000.0;
      return std::nullopt;
    case Quantity::kDecibel:
      if (unit.empty() || unit == "dB") return v;
      return std::nullopt;
    case Quantity::kPowerDbm:
      if (unit.empty() || unit == "dBm") return v;
      if (unit == "mW") return 10.0 * std::log10(v);
      if (unit == "W") return 10.0 * std::log10(v) + 30.0;
      return std::nullopt;
    case Quantity::kPsd:
      if (unit.empty() || unit == "dBm/Hz") return v;
      return std::nullopt;
    case Quantity::kFrequency:
      if (unit.empty() || unit == "Hz") return v;
      if (unit == "kHz") return v * 1e3;
      if (unit == "MHz") return v * 1e6;
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

inline void assign(SimConfig& c, std::string_view key, double v) {
  if (key == "cell_radius_m") c.cell_radius_m = v;
  else if (key == "mta_cluster_radius_m") c.mta_cluster_radius_m = v;
  else if (key == "noise_figure_db") c.noise_figure_db = v;
  else if (key == "noise_psd_dbm_hz") c.noise_psd_dbm_hz = v;
  else if (key == "rb_bandwidth_hz") c.rb_bandwidth_hz = v;
  else if (key == "cu_target_sinr_db") c.cu_target_sinr_db = v;
  else if (key == "mtd_fixed_power_dbm") c.mtd_fixed_power_dbm = v;
  else if (key == "mtd_target_sinr_db") c.mtd_target_sinr_db = v;
  else if (key == "p_max_dbm") c.p_max_dbm = v;
  else if (key == "i0_dbm") c.i0_dbm = v;
  else if (key == "min_distance_m") c.min_distance_m = v;
  else if (key == "cu_mta_exclusion_m") c.cu_mta_exclusion_m = v;
  else if (key == "delta_th_db") c.delta_th_db = v;
  else if (key == "delta_i_dbm") c.delta_i_dbm = v;
}

inline void assign_count(SimConfig& c, std::string_view key, std::uint64_t v) {
  if (key == "antennas") c.antennas = v;
  else if (key == "n_rb") c.n_rb = v;
  else if (key == "k") c.k = v;
  else if (key == "n_drops") c.n_drops = v;
  else if (key == "seed") c.seed = v;
}

}  // namespace detail

/// Applies one `key = value` setting to `config`. Throws ConfigError.
inline void apply_setting(SimConfig& config, std::string_view key, std::string_view value) {
  using detail::Quantity;
  const auto& specs = detail::key_specs();
  const auto it = specs.find(key);
  if (it == specs.end()) throw ConfigError("unknown key '" + std::string(key) + "'");
  const auto spec = it->second;
  if (value.empty()) throw ConfigError("missing value for '" + std::string(key) + "'");

  if (spec.quantity == Quantity::kMode) {
    const auto mode = power_mode_from_string(value);
    if (!mode) throw ConfigError("mtd_power_mode must be 'fixed' or 'controlled'");
    config.mtd_power_mode = *mode;
    return;
  }
  if (spec.quantity == Quantity::kCount || spec.quantity == Quantity::kSeed) {
    const auto v = detail::parse_u64(value);
    if (!v) throw ConfigError("'" + std::string(key) + "' needs a non-negative integer");
    if (spec.quantity == Quantity::kCount && *v < 1) throw ConfigError("'" + std::string(key) + "' must be >= 1");
    detail::assign_count(config, key, *v);
    return;
  }
  if (spec.optional_auto && value == "auto") {
    if (key == "i0_dbm") config.i0_dbm.reset();
    else config.delta_i_dbm.reset();
    return;
  }
  const auto [number, unit] = detail::split_unit(value);
  const auto v = detail::parse_double(number);
  if (!v) throw ConfigError("'" + std::string(key) + "' needs a number, got '" + std::string(value) + "'");
  const auto canonical = detail::to_canonical(spec.quantity, *v, unit);
  if (!canonical) throw ConfigError("unit '" + std::string(unit) + "' is not valid for '" + std::string(key) + "'");
  if (std::isnan(*canonical)) throw ConfigError("'" + std::string(key) + "' is not a number");
  const bool is_power = spec.quantity == Quantity::kPowerDbm;
  if (!is_power && !std::isfinite(*canonical)) throw ConfigError("'" + std::string(key) + "' must be finite");
  if (is_power && *canonical == INFINITY) throw ConfigError("'" + std::string(key) + "' must be < +inf");
  if (spec.quantity == Quantity::kLength && *canonical < 0.0) throw ConfigError("'" + std::string(key) + "' must be >= 0");
  if (spec.quantity == Quantity::kFrequency && *canonical <= 0.0) throw ConfigError("'" + std::string(key) + "' must be > 0");
  detail::assign(config, key, *canonical);
}

/// Parses config text. Errors carry the 1-based line; cross-field problems
/// found by validate() are reported without one.
inline SimConfig parse_config_text(std::istream& in) {
  SimConfig config;
  std::set<std::string, std::less<>> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = detail::trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    const auto key = detail::trim(view.substr(0, eq));
    const auto value = detail::trim(view.substr(eq + 1));
    if (key.empty()) throw ParseError(line_no, "missing key");
    if (!seen.insert(std::string(key)).second) throw ParseError(line_no, "duplicate key '" + std::string(key) + "'");
    try {
      apply_setting(config, key, value);
    } catch (const ParseError&) {
      throw;
    } catch (const ConfigError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  validate(config);
  return config;
}

inline SimConfig parse_config_string(const std::string& text) {
  std::istringstream in(text);
  return parse_config_text(in);
}

inline SimConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config_text(in);
}

/// Every key in canonical units; parse_config_string(serialize_config(c)) == c.
inline std::string serialize_config(const SimConfig& c) {
  using detail::format_double;
  std::ostringstream out;
  out << "antennas = " << c.antennas << '\n'
      << "cell_radius_m = " << format_double(c.cell_radius_m) << '\n'
      << "mta_cluster_radius_m = " << format_double(c.mta_cluster_radius_m) << '\n'
      << "n_rb = " << c.n_rb << '\n'
      << "noise_figure_db = " << format_double(c.noise_figure_db) << '\n'
      << "noise_psd_dbm_hz = " << format_double(c.noise_psd_dbm_hz) << '\n'
      << "rb_bandwidth_hz = " << format_double(c.rb_bandwidth_hz) << '\n'
      << "cu_target_sinr_db = " << format_double(c.cu_target_sinr_db) << '\n'
      << "mtd_power_mode = " << to_string(c.mtd_power_mode) << '\n'
      << "mtd_fixed_power_dbm = " << format_double(c.mtd_fixed_power_dbm) << '\n'
      << "mtd_target_sinr_db = " << format_double(c.mtd_target_sinr_db) << '\n'
      << "p_max_dbm = " << format_double(c.p_max_dbm) << '\n'
      << "i0_dbm = " << (c.i0_dbm ? format_double(*c.i0_dbm) : "auto") << '\n'
      << "k = " << c.k << '\n'
      << "n_drops = " << c.n_drops << '\n'
      << "seed = " << c.seed << '\n'
      << "min_distance_m = " << format_double(c.min_distance_m) << '\n'
      << "cu_mta_exclusion_m = " << format_double(c.cu_mta_exclusion_m) << '\n'
      << "delta_th_db = " << format_double(c.delta_th_db) << '\n'
      << "delta_i_dbm = " << (c.delta_i_dbm ? format_double(*c.delta_i_dbm) : "auto") << '\n';
  return out.str();
}

}  // namespace oso

#endif  // OSO_CONFIG_IO_HPP
