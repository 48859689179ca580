#ifndef OSO_REPORT_HPP
#define OSO_REPORT_HPP

#include <array>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "oso/montecarlo.hpp"

namespace oso {

// CSV output. Every file has a header row; numbers are written with 9
// significant digits independent of the locale; counts are plain integers.

inline std::string format_sig9(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 9);
  return std::string(buf.data(), ptr);
}

namespace detail {

inline void csv_row(std::string& out, std::size_t k, std::initializer_list<double> fields) {
  out += std::to_string(k);
  for (double f : fields) {
    out += ',';
    out += format_sig9(f);
  }
  out += '\n';
}

}  // namespace detail

inline constexpr const char* kSingleRbHeader =
    "k,mtd_power_dbm,mean_sinr_db,median_sinr_db,outage_rate,ci_halfwidth_db\n";
inline constexpr const char* kThroughputHeader = "k,mean_throughput_bps,target_rate_bps\n";
inline constexpr const char* kOutageHeader = "k,delta_th_db,outage_rate,ci_halfwidth\n";
inline constexpr const char* kAsymptoticHeader = "k,mc_probability,closed_form_probability,abs_difference\n";

inline std::string single_rb_csv(const ExperimentSummary& s) {
  std::string out = kSingleRbHeader;
  for (const auto& r : s.rows) {
    detail::csv_row(out, r.k, {r.mtd_power_dbm, r.mean_sinr_db, r.median_sinr_db, r.outage_rate, r.ci_halfwidth_db});
  }
  return out;
}

inline std::string throughput_csv(const std::vector<SummaryRow>& rows) {
  std::string out = kThroughputHeader;
  for (const auto& r : rows) detail::csv_row(out, r.k, {r.mean_throughput_bps, r.target_rate_bps});
  return out;
}

inline std::string outage_csv(const ExperimentSummary& s, double delta_th_db) {
  std::string out = kOutageHeader;
  for (const auto& r : s.rows) {
    const double p = r.outage_rate;
    const double ci = kZ95 * std::sqrt(p * (1.0 - p) / static_cast<double>(r.drops));
    detail::csv_row(out, r.k, {delta_th_db, p, ci});
  }
  return out;
}

inline std::string asymptotic_csv(const AsymptoticResult& a) {
  std::string out = kAsymptoticHeader;
  for (const auto& p : a.points) {
    detail::csv_row(out, p.k, {p.mc_probability, p.closed_form, std::abs(p.mc_probability - p.closed_form)});
  }
  return out;
}

}  // namespace oso

#endif  // OSO_REPORT_HPP
