#ifndef OSO_CHANNEL_HPP
#define OSO_CHANNEL_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "oso/config.hpp"
#include "oso/errors.hpp"
#include "oso/random.hpp"

namespace oso {

using Complex = std::complex<double>;

/// Planar position in meters; the BS sits at the origin.
struct Position {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Position&) const = default;
};

inline double distance(Position a, Position b) { return std::hypot(a.x - b.x, a.y - b.y); }

inline double distance_to_bs(Position p) { return std::hypot(p.x, p.y); }

struct Deployment {
  Position bs{};
  Position mta{};
  std::vector<Position> mtds;
  Position cu{};

  bool operator==(const Deployment&) const = default;
};

/// Complex antenna gains of one link on one resource block.
class ChannelVector {
 public:
  ChannelVector() = default;

  explicit ChannelVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw DimensionError("channel vector needs at least one antenna");
    for (const auto& e : entries_) {
      if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
        throw std::domain_error("channel vector entries must be finite");
      }
    }
  }

  ChannelVector(std::initializer_list<Complex> entries)
      : ChannelVector(std::vector<Complex>(entries)) {}

  std::size_t size() const { return entries_.size(); }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Complex> entries() const { return entries_; }

  double squared_norm() const {
    double s = 0.0;
    for (const auto& e : entries_) s += std::norm(e);
    return s;
  }

  bool operator==(const ChannelVector&) const = default;

 private:
  std::vector<Complex> entries_;
};

inline constexpr double kDefaultMinDistanceM = 10.0;

/// Macro-cell path loss in dB: 128.1 + 36.7 log10(d / 1 km).
inline double pathloss_db(double distance_m, double min_distance_m = kDefaultMinDistanceM) {
  if (!(distance_m >= min_distance_m)) {
    throw GeometryError("distance " + std::to_string(distance_m) + " m is below the minimum of " +
                        std::to_string(min_distance_m) + " m");
  }
  return 128.1 + 36.7 * std::log10(distance_m / 1000.0);
}

/// Linear average power gain of a link at the given distance.
inline double pathloss_gain(double distance_m, double min_distance_m = kDefaultMinDistanceM) {
  return std::pow(10.0, -pathloss_db(distance_m, min_distance_m) / 10.0);
}

/// Rayleigh channel with i.i.d. CN(0, gain) entries.
inline ChannelVector gen_channel_with_gain(double gain, std::size_t antennas, RandomStream& rng) {
  if (antennas < 1) throw DimensionError("antennas must be >= 1");
  const double amplitude = std::sqrt(gain);
  std::vector<Complex> entries(antennas);
  for (auto& e : entries) e = amplitude * rng.complex_gaussian();
  return ChannelVector(std::move(entries));
}

/// Rayleigh channel whose average power per antenna is the path-loss gain
/// at `distance_m`.
inline ChannelVector gen_channel(double distance_m, std::size_t antennas, RandomStream& rng,
                                 double min_distance_m = kDefaultMinDistanceM) {
  if (antennas < 1) throw DimensionError("antennas must be >= 1");
  return gen_channel_with_gain(pathloss_gain(distance_m, min_distance_m), antennas, rng);
}

namespace detail {

inline constexpr int kMaxRejections = 1'000'000;

inline Position uniform_in_disk(Position center, double radius, RandomStream& rng) {
  const double r = radius * std::sqrt(rng.uniform());
  const double theta = 2.0 * std::numbers::pi * rng.uniform();
  return {center.x + r * std::cos(theta), center.y + r * std::sin(theta)};
}

inline Position sample_mta(const SimConfig& config, RandomStream& rng) {
  for (int i = 0; i < kMaxRejections; ++i) {
    Position p = uniform_in_disk({}, config.cell_radius_m, rng);
    if (distance_to_bs(p) >= config.min_distance_m) return p;
  }
  throw ConfigError("could not place the MTA inside the cell");
}

/// One MTD around `mta`, kept inside the cell and outside the BS guard ring.
inline Position sample_mtd(const SimConfig& config, Position mta, RandomStream& rng) {
  for (int i = 0; i < kMaxRejections; ++i) {
    Position p = uniform_in_disk(mta, config.mta_cluster_radius_m, rng);
    const double d = distance_to_bs(p);
    if (d <= config.cell_radius_m && d >= config.min_distance_m) return p;
  }
  throw ConfigError("MTD cluster does not intersect the feasible part of the cell");
}

}  // namespace detail

/// Uniform CU position in the cell, at least min_distance_m from the BS and
/// cu_mta_exclusion_m from the MTA.
inline Position sample_cu_position(const SimConfig& config, Position mta, RandomStream& rng) {
  if (config.cu_mta_exclusion_m > 2.0 * config.cell_radius_m ||
      config.cu_mta_exclusion_m >= config.cell_radius_m + distance_to_bs(mta)) {
    throw ConfigError("CU exclusion zone around the MTA covers the whole cell");
  }
  for (int i = 0; i < detail::kMaxRejections; ++i) {
    Position p = detail::uniform_in_disk({}, config.cell_radius_m, rng);
    if (distance_to_bs(p) >= config.min_distance_m && distance(p, mta) >= config.cu_mta_exclusion_m) {
      return p;
    }
  }
  throw ConfigError("CU placement constraints leave no feasible area");
}

/// MTA uniform in the cell, then config.k MTDs in order around it, then an
/// initial CU position. MTDs are drawn sequentially, so the first k of a
/// larger deployment equal a smaller deployment from the same stream.
inline Deployment sample_deployment(const SimConfig& config, RandomStream& rng) {
  validate(config);
  Deployment d;
  d.mta = detail::sample_mta(config, rng);
  d.mtds.reserve(config.k);
  for (std::size_t i = 0; i < config.k; ++i) d.mtds.push_back(detail::sample_mtd(config, d.mta, rng));
  d.cu = sample_cu_position(config, d.mta, rng);
  return d;
}

}  // namespace oso

#endif  // OSO_CHANNEL_HPP
