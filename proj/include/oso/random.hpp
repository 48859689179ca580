#ifndef OSO_RANDOM_HPP
#define OSO_RANDOM_HPP

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace oso {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// Labels for independent substreams. Each consumer of randomness in a drop
/// owns its own substream, so adding candidates or RBs never shifts the
/// draws seen by another consumer.
enum class StreamTag : std::uint64_t {
  kDeployment = 1,
  kCuPosition = 2,
  kResourceBlock = 3,
  kMtaLink = 4,
  kBaseline = 5,
  kAsymptotic = 6,
  kAsymptoticCdf = 7,
  kDrop = 8,
};

/// A seeded pseudo-random stream. Not thread-safe; give each worker its own.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(detail::splitmix64(seed)) {}

  /// Deterministic substream keyed by (seed, tag, indices...).
  static RandomStream derive(std::uint64_t seed, StreamTag tag,
                             std::initializer_list<std::uint64_t> indices = {}) {
    std::uint64_t h = detail::splitmix64(seed ^ 0x6a09e667f3bcc908ULL);
    h = detail::splitmix64(h ^ static_cast<std::uint64_t>(tag));
    for (auto i : indices) h = detail::splitmix64(h ^ detail::splitmix64(i));
    return RandomStream(h);
  }

  /// Uniform on [0, 1).
  double uniform() { return uniform_(engine_); }

  double normal() { return normal_(engine_); }

  /// Circularly-symmetric complex Gaussian with unit total variance.
  std::complex<double> complex_gaussian() {
    constexpr double kHalf = 0.70710678118654752440;
    const double re = normal_(engine_);
    const double im = normal_(engine_);
    return {kHalf * re, kHalf * im};
  }

  /// Uniform integer on [0, n).
  std::uint64_t below(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace oso

#endif  // OSO_RANDOM_HPP
