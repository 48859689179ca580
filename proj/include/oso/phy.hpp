#ifndef OSO_PHY_HPP
#define OSO_PHY_HPP

#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "oso/channel.hpp"
#include "oso/errors.hpp"

namespace oso {

/// Receive combining weights of the BS. Applying w to a channel h yields
/// the scalar sum_i w_i h_i (w is a row vector).
class Beamformer {
 public:
  explicit Beamformer(std::vector<Complex> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw DimensionError("beamformer needs at least one weight");
    if (squared_norm() <= 0.0) throw DegenerateChannelError("beamformer has zero norm");
  }

  std::size_t size() const { return weights_.size(); }
  const Complex& operator[](std::size_t i) const { return weights_[i]; }
  std::span<const Complex> weights() const { return weights_; }

  double squared_norm() const {
    double s = 0.0;
    for (const auto& w : weights_) s += std::norm(w);
    return s;
  }

  /// Same direction, unit norm.
  Beamformer normalized() const {
    const double n = std::sqrt(squared_norm());
    std::vector<Complex> out(weights_);
    for (auto& w : out) w /= n;
    return Beamformer(std::move(out));
  }

  Beamformer scaled(Complex alpha) const {
    std::vector<Complex> out(weights_);
    for (auto& w : out) w *= alpha;
    return Beamformer(std::move(out));
  }

 private:
  std::vector<Complex> weights_;
};

/// Linear powers of one shared resource block.
struct LinkBudget {
  double p_c = 0.0;  // CU transmit power [W]
  double p_k = 0.0;  // MTD transmit power [W]
  double n0 = 0.0;   // noise power per RB [W]
  double i0 = 0.0;   // background interference at the MTA [W]

  void validate() const {
    if (!(p_c >= 0.0) || !(p_k >= 0.0) || !(i0 >= 0.0)) {
      throw std::invalid_argument("link budget powers must be >= 0");
    }
    if (!(n0 > 0.0)) throw std::invalid_argument("noise power must be > 0");
  }
};

inline Complex apply(const Beamformer& w, const ChannelVector& h) {
  if (w.size() != h.size()) throw DimensionError("beamformer and channel sizes differ");
  Complex acc{};
  for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * h[i];
  return acc;
}

/// |w h|^2, the power gain of a channel seen through the beamformer.
inline double beamformed_gain(const Beamformer& w, const ChannelVector& h) {
  return std::norm(apply(w, h));
}

/// Maximal ratio combining: w = h_c^H.
inline Beamformer mrc_weights(const ChannelVector& h_c) {
  if (h_c.squared_norm() <= 0.0) throw DegenerateChannelError("MRC needs a nonzero channel");
  std::vector<Complex> w(h_c.size());
  for (std::size_t i = 0; i < h_c.size(); ++i) w[i] = std::conj(h_c[i]);
  return Beamformer(std::move(w));
}

enum class InterferenceForm {
  kRaw,            // P_k |w h_kb|^2
  kMrcNormalized,  // P_k |w h_kb|^2 / ||w||^2, i.e. P_k |h_c^H h_kb|^2 / ||h_c||^2 under MRC
};

inline double effective_interference(const Beamformer& w, const ChannelVector& h_kb, double p_k,
                                     InterferenceForm form = InterferenceForm::kRaw) {
  const double raw = p_k * beamformed_gain(w, h_kb);
  return form == InterferenceForm::kRaw ? raw : raw / w.squared_norm();
}

/// SINR from already-projected terms: signal / (interference + ||w||^2 N0).
inline double sinr_from_terms(double signal_power, double interference, double w_squared_norm,
                              double n0) {
  return signal_power / (interference + w_squared_norm * n0);
}

/// Cellular SINR after an arbitrary receive beamformer:
///   P_c |w h_c|^2 / (P_k |w h_kb|^2 + ||w||^2 N0).
inline double sinr_cellular(const ChannelVector& h_c, const Beamformer& w, const ChannelVector& h_kb,
                            const LinkBudget& budget) {
  budget.validate();
  if (h_c.size() != h_kb.size()) throw DimensionError("h_c and h_kb sizes differ");
  return sinr_from_terms(budget.p_c * beamformed_gain(w, h_c), budget.p_k * beamformed_gain(w, h_kb),
                         w.squared_norm(), budget.n0);
}

/// Closed form under MRC:
///   P_c ||h_c||^2 / (P_k |h_c^H h_kb|^2 / ||h_c||^2 + N0).
inline double sinr_cellular_mrc(const ChannelVector& h_c, const ChannelVector& h_kb,
                                 const LinkBudget& budget) {
  budget.validate();
  if (h_c.size() != h_kb.size()) throw DimensionError("h_c and h_kb sizes differ");
  const double hc2 = h_c.squared_norm();
  if (hc2 <= 0.0) throw DegenerateChannelError("MRC needs a nonzero channel");
  Complex cross{};
  for (std::size_t i = 0; i < h_c.size(); ++i) cross += std::conj(h_c[i]) * h_kb[i];
  return budget.p_c * hc2 / (budget.p_k * std::norm(cross) / hc2 + budget.n0);
}

/// MTD-to-MTA SINR with the CU treated as background interference I_0.
inline double sinr_mta(const ChannelVector& h_k, const LinkBudget& budget) {
  budget.validate();
  return budget.p_k * h_k.squared_norm() / (budget.i0 + budget.n0);
}

/// Shannon sum rate over resource blocks [bit/s].
inline double throughput(std::span<const double> sinrs, double rb_bandwidth_hz) {
  double total = 0.0;
  for (double s : sinrs) {
    if (!(s >= 0.0)) throw std::invalid_argument("SINR must be >= 0");
    total += rb_bandwidth_hz * std::log2(1.0 + s);
  }
  return total;
}

/// Outage: SINR at or below the threshold.
inline bool outage_indicator(double sinr, double threshold) {
  if (!(threshold > 0.0)) throw std::invalid_argument("outage threshold must be > 0");
  return sinr <= threshold;
}

/// True when the MRC-normalized interference stays strictly below delta_i,
/// i.e. the MTD may share the RB without harmful interference.
inline bool interference_criterion(double effective_interference_w, double delta_i_w) {
  if (!(delta_i_w > 0.0)) throw std::invalid_argument("interference threshold must be > 0");
  return effective_interference_w < delta_i_w;
}

/// The interference level at which the MRC SINR equals delta_th exactly:
///   P_c ||h_c||^2 / (I + N0) = delta_th.
/// Interference strictly below it keeps the CU out of outage.
inline double interference_threshold(double p_c, double hc_squared_norm, double n0, double delta_th) {
  if (!(delta_th > 0.0)) throw std::invalid_argument("outage threshold must be > 0");
  return p_c * hc_squared_norm / delta_th - n0;
}

}  // namespace oso

#endif  // OSO_PHY_HPP
