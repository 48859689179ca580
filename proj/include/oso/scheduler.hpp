#ifndef OSO_SCHEDULER_HPP
#define OSO_SCHEDULER_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "oso/channel.hpp"
#include "oso/errors.hpp"
#include "oso/phy.hpp"

namespace oso {

/// Received interference power [W] at the BS from MTD k on resource block n,
/// after that block's beamformer. Row-major, N rows by K columns.
class InterferenceMatrix {
 public:
  InterferenceMatrix(std::size_t rows, std::size_t cols, std::vector<double> values)
      : rows_(rows), cols_(cols), values_(std::move(values)) {
    if (rows_ < 1 || cols_ < 1) throw DimensionError("interference matrix needs N >= 1 and K >= 1");
    if (values_.size() != rows_ * cols_) throw DimensionError("interference matrix size mismatch");
    for (double v : values_) {
      if (!std::isfinite(v) || v < 0.0) {
        throw std::domain_error("interference entries must be finite and >= 0");
      }
    }
  }

  InterferenceMatrix(std::initializer_list<std::initializer_list<double>> rows)
      : InterferenceMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0, flatten(rows)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t n, std::size_t k) const { return values_[n * cols_ + k]; }
  std::span<const double> row(std::size_t n) const { return {values_.data() + n * cols_, cols_}; }

  /// The first `cols` columns, i.e. the matrix restricted to the first MTDs.
  InterferenceMatrix leading_columns(std::size_t cols) const {
    if (cols < 1 || cols > cols_) throw DimensionError("column prefix out of range");
    std::vector<double> out;
    out.reserve(rows_ * cols);
    for (std::size_t n = 0; n < rows_; ++n) {
      auto r = row(n);
      out.insert(out.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(cols));
    }
    return InterferenceMatrix(rows_, cols, std::move(out));
  }

 private:
  static std::vector<double> flatten(std::initializer_list<std::initializer_list<double>> rows) {
    std::vector<double> out;
    for (const auto& r : rows) {
      if (r.size() != rows.begin()->size()) throw DimensionError("ragged interference matrix");
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

/// RB n -> MTD index (0-based), or nullopt when the RB carries no MTD.
struct Assignment {
  std::vector<std::optional<std::size_t>> rb_to_mtd;

  bool operator==(const Assignment&) const = default;

  std::size_t assigned_count() const {
    return static_cast<std::size_t>(
        std::count_if(rb_to_mtd.begin(), rb_to_mtd.end(), [](const auto& m) { return m.has_value(); }));
  }

  double total_interference(const InterferenceMatrix& matrix) const {
    double total = 0.0;
    for (std::size_t n = 0; n < rb_to_mtd.size(); ++n) {
      if (rb_to_mtd[n]) total += matrix(n, *rb_to_mtd[n]);
    }
    return total;
  }
};

/// Index of the smallest entry; ties go to the lowest index.
inline std::size_t select_min_interference(std::span<const double> row) {
  if (row.empty()) throw std::invalid_argument("cannot select from an empty interference row");
  std::size_t best = 0;
  for (std::size_t k = 1; k < row.size(); ++k) {
    if (row[k] < row[best]) best = k;
  }
  return best;
}

/// Entry (n, k) = powers[k] * |w_n h_nk|^2. `channels[n][k]` is MTD k's
/// channel to the BS on resource block n.
inline InterferenceMatrix build_interference_matrix(std::span<const Beamformer> beamformers,
                                                    const std::vector<std::vector<ChannelVector>>& channels,
                                                    std::span<const double> powers) {
  const std::size_t n_rb = beamformers.size();
  const std::size_t k = powers.size();
  if (channels.size() != n_rb) throw DimensionError("need one channel row per beamformer");
  std::vector<double> values;
  values.reserve(n_rb * k);
  for (std::size_t n = 0; n < n_rb; ++n) {
    if (channels[n].size() != k) throw DimensionError("need one channel per MTD on every RB");
    for (std::size_t i = 0; i < k; ++i) values.push_back(powers[i] * beamformed_gain(beamformers[n], channels[n][i]));
  }
  return InterferenceMatrix(n_rb, k, std::move(values));
}

/// Greedy matching of resource blocks to distinct MTDs.
///
/// Every RB first claims its row minimum. While some MTD is claimed by
/// several RBs, the RB that sees the smaller interference from it keeps it
/// (lower RB index on ties) and each loser moves to its smallest MTD that no
/// RB currently claims (lower MTD index on ties). Losers of one round move
/// simultaneously, so they may collide again in the next round. Winners are
/// never displaced, hence the set of claimed MTDs only grows and the loop
/// ends after at most K rounds. With K < N the surplus RBs stay unassigned.
inline Assignment match_assignments(const InterferenceMatrix& matrix) {
  const std::size_t n_rb = matrix.rows();
  const std::size_t k = matrix.cols();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::vector<std::size_t> claim(n_rb);
  std::vector<char> claimed(k, 0);
  for (std::size_t n = 0; n < n_rb; ++n) {
    claim[n] = select_min_interference(matrix.row(n));
    claimed[claim[n]] = 1;
  }

  std::vector<std::size_t> holder(k, kNone);
  std::vector<std::size_t> losers;
  for (;;) {
    losers.clear();
    std::fill(holder.begin(), holder.end(), kNone);
    for (std::size_t n = 0; n < n_rb; ++n) {
      const std::size_t c = claim[n];
      if (c == kNone) continue;
      const std::size_t h = holder[c];
      if (h == kNone) {
        holder[c] = n;
      } else if (matrix(n, c) < matrix(h, c)) {
        losers.push_back(h);
        holder[c] = n;
      } else {
        losers.push_back(n);
      }
    }
    if (losers.empty()) break;
    std::sort(losers.begin(), losers.end());

    std::vector<std::pair<std::size_t, std::size_t>> moves;
    moves.reserve(losers.size());
    for (std::size_t n : losers) {
      auto r = matrix.row(n);
      std::size_t best = kNone;
      for (std::size_t i = 0; i < k; ++i) {
        if (claimed[i]) continue;
        if (best == kNone || r[i] < r[best]) best = i;
      }
      moves.emplace_back(n, best);
    }
    for (auto [n, c] : moves) {
      claim[n] = c;
      if (c != kNone) claimed[c] = 1;
    }
  }

  Assignment out;
  out.rb_to_mtd.resize(n_rb);
  for (std::size_t n = 0; n < n_rb; ++n) {
    if (claim[n] != kNone) out.rb_to_mtd[n] = claim[n];
  }
  return out;
}

inline constexpr std::size_t kOracleMaxDim = 8;

/// Exhaustive search over injective assignments. Assigns min(N, K) RBs and
/// minimizes the total interference among those; the first optimum in
/// enumeration order (ascending MTD index, "unassigned" last) wins ties.
/// Test oracle only.
inline Assignment optimal_assignment_oracle(const InterferenceMatrix& matrix) {
  const std::size_t n_rb = matrix.rows();
  const std::size_t k = matrix.cols();
  if (n_rb > kOracleMaxDim || k > kOracleMaxDim) {
    throw std::invalid_argument("optimal assignment oracle is limited to 8x8 matrices");
  }
  const std::size_t max_unassigned = n_rb > k ? n_rb - k : 0;

  std::vector<std::optional<std::size_t>> current(n_rb), best;
  std::vector<char> used(k, 0);
  double best_total = std::numeric_limits<double>::infinity();

  auto search = [&](auto&& self, std::size_t n, std::size_t unassigned, double total) -> void {
    if (n == n_rb) {
      if (total < best_total) {
        best_total = total;
        best = current;
      }
      return;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (used[i]) continue;
      used[i] = 1;
      current[n] = i;
      self(self, n + 1, unassigned, total + matrix(n, i));
      used[i] = 0;
    }
    if (unassigned < max_unassigned) {
      current[n].reset();
      self(self, n + 1, unassigned + 1, total);
    }
  };
  search(search, 0, 0, 0.0);
  return Assignment{std::move(best)};
}

/// MTD power that meets the MTA target SINR, capped at p_max:
///   min(p_max, target (I_0 + N_0) / |h_k|^2).
inline double mtd_power_control(const ChannelVector& h_k, const LinkBudget& budget, double target_sinr,
                                double p_max) {
  const double g = h_k.squared_norm();
  if (g <= 0.0) throw DegenerateChannelError("MTD-to-MTA channel has zero gain");
  return std::min(p_max, target_sinr * (budget.i0 + budget.n0) / g);
}

/// CU power that meets the target SINR under MRC without interference:
///   min(p_max, target N_0 / ||h_c||^2).
inline double cu_power_control(const ChannelVector& h_c, double n0, double target_sinr, double p_max) {
  const double g = h_c.squared_norm();
  if (g <= 0.0) throw DegenerateChannelError("CU channel has zero gain");
  return std::min(p_max, target_sinr * n0 / g);
}

}  // namespace oso

#endif  // OSO_SCHEDULER_HPP
