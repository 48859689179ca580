#ifndef OSO_MONTECARLO_HPP
#define OSO_MONTECARLO_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "oso/channel.hpp"
#include "oso/config.hpp"
#include "oso/phy.hpp"
#include "oso/random.hpp"
#include "oso/scheduler.hpp"
#include "oso/units.hpp"

namespace oso {

/// Per-RB outcome of one Monte Carlo realization.
struct DropResult {
  std::vector<double> sinr_db;
  std::vector<std::optional<std::size_t>> selected_mtd;  // 0-based
  std::vector<double> effective_interference_w;         // MRC-normalized, 0 when no MTD
  std::vector<double> mta_sinr_db;                       // -inf when no MTD
  std::vector<double> mtd_power_w;                       // selected MTD's power, 0 when none
  double throughput_bps = 0.0;
  bool outage = false;  // some RB at or below delta_th

  bool operator==(const DropResult&) const = default;
};

enum class Scheduling { kOpportunistic, kRandom };

struct ExperimentOptions {
  std::size_t workers = 0;  // 0: one per hardware thread
};

/// One aggregated point of a sweep.
struct SummaryRow {
  std::size_t k = 0;
  double mtd_power_dbm = 0.0;
  double mean_sinr_db = 0.0;
  double median_sinr_db = 0.0;
  double outage_rate = 0.0;
  double ci_halfwidth_db = 0.0;
  double mean_throughput_bps = 0.0;
  double ci_halfwidth_bps = 0.0;
  double target_rate_bps = 0.0;
  std::size_t drops = 0;

  bool operator==(const SummaryRow&) const = default;
};

struct ExperimentSummary {
  std::vector<SummaryRow> rows;
  // Random injective MTD-to-RB assignment; filled by the throughput experiment.
  std::vector<SummaryRow> baseline_rows;

  bool operator==(const ExperimentSummary&) const = default;
};

/// Two-sided 95 % normal quantile used for every confidence half-width.
inline constexpr double kZ95 = 1.959963984540054;

/// Per-MTD average link gains; MTD positions are fixed for a run.
struct RunGeometry {
  std::vector<double> mtd_bs_gain;
  std::vector<double> mtd_mta_gain;
};

/// Everything random about one drop, realized for the first `k` MTDs.
/// `gains` holds |w_n h_nk|^2 for the unit-norm MRC beamformer of RB n.
struct DropChannels {
  std::size_t n_rb = 0;
  std::size_t k = 0;
  Position cu{};
  std::vector<ChannelVector> h_c;
  std::vector<double> gains;
  std::vector<ChannelVector> h_mta;
  std::uint64_t drop_seed = 0;

  double gain(std::size_t n, std::size_t i) const { return gains[n * k + i]; }
};

/// MTD-to-MTA links are short; distances below the guard use the guard.
inline RunGeometry run_geometry(const SimConfig& config, const Deployment& deployment, std::size_t k) {
  if (deployment.mtds.size() < k) throw DimensionError("deployment has fewer MTDs than requested");
  RunGeometry g;
  g.mtd_bs_gain.reserve(k);
  g.mtd_mta_gain.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Position p = deployment.mtds[i];
    g.mtd_bs_gain.push_back(pathloss_gain(distance_to_bs(p), config.min_distance_m));
    g.mtd_mta_gain.push_back(
        pathloss_gain(std::max(distance(p, deployment.mta), config.min_distance_m), config.min_distance_m));
  }
  return g;
}

/// The run's fixed deployment with `k` MTDs. Smaller k yields a prefix.
inline Deployment run_deployment(const SimConfig& config, std::size_t k) {
  SimConfig c = config;
  c.k = k;
  auto rng = RandomStream::derive(config.seed, StreamTag::kDeployment);
  return sample_deployment(c, rng);
}

/// Draws the CU position and all channels of one drop. Every RB and the
/// MTA links use their own substream of the drop, and MTD channels are drawn
/// in index order, so realizing k MTDs gives a prefix of realizing more.
inline DropChannels realize_drop(const SimConfig& config, const Deployment& deployment,
                                 const RunGeometry& geometry, std::size_t k, RandomStream& rng) {
  if (geometry.mtd_bs_gain.size() < k) throw DimensionError("run geometry has fewer MTDs than requested");
  DropChannels ch;
  ch.n_rb = config.n_rb;
  ch.k = k;
  ch.drop_seed = rng.engine()();

  auto cu_rng = RandomStream::derive(ch.drop_seed, StreamTag::kCuPosition);
  ch.cu = sample_cu_position(config, deployment.mta, cu_rng);
  const double cu_gain = pathloss_gain(distance_to_bs(ch.cu), config.min_distance_m);

  ch.h_c.reserve(ch.n_rb);
  ch.gains.resize(ch.n_rb * k);
  for (std::size_t n = 0; n < ch.n_rb; ++n) {
    auto rb_rng = RandomStream::derive(ch.drop_seed, StreamTag::kResourceBlock, {n});
    ch.h_c.push_back(gen_channel_with_gain(cu_gain, config.antennas, rb_rng));
    const Beamformer w = mrc_weights(ch.h_c.back()).normalized();
    for (std::size_t i = 0; i < k; ++i) {
      const ChannelVector h = gen_channel_with_gain(geometry.mtd_bs_gain[i], config.antennas, rb_rng);
      ch.gains[n * k + i] = beamformed_gain(w, h);
    }
  }

  auto mta_rng = RandomStream::derive(ch.drop_seed, StreamTag::kMtaLink);
  ch.h_mta.reserve(k);
  for (std::size_t i = 0; i < k; ++i) ch.h_mta.push_back(gen_channel_with_gain(geometry.mtd_mta_gain[i], 1, mta_rng));
  return ch;
}

namespace detail {

inline std::vector<double> mtd_powers(const SimConfig& config, const DropChannels& ch, std::size_t k) {
  std::vector<double> p(k);
  if (config.mtd_power_mode == PowerMode::kFixed) {
    std::fill(p.begin(), p.end(), config.mtd_fixed_power_watts());
  } else {
    const LinkBudget budget{0.0, 0.0, config.noise_watts(), config.i0_watts()};
    for (std::size_t i = 0; i < k; ++i) {
      p[i] = mtd_power_control(ch.h_mta[i], budget, config.mtd_target_sinr(), config.p_max_watts());
    }
  }
  return p;
}

inline Assignment random_assignment(std::size_t n_rb, std::size_t k, std::uint64_t drop_seed) {
  auto rng = RandomStream::derive(drop_seed, StreamTag::kBaseline);
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  const std::size_t m = std::min(n_rb, k);
  for (std::size_t i = 0; i < m; ++i) std::swap(order[i], order[i + rng.below(k - i)]);
  Assignment a;
  a.rb_to_mtd.resize(n_rb);
  for (std::size_t n = 0; n < m; ++n) a.rb_to_mtd[n] = order[n];
  return a;
}

}  // namespace detail

/// Schedules the first `k` MTDs of a realized drop and scores the result.
inline DropResult evaluate_drop(const SimConfig& config, const DropChannels& ch, std::size_t k,
                                Scheduling scheduling = Scheduling::kOpportunistic) {
  if (k < 1 || k > ch.k) throw DimensionError("k out of range for the realized drop");
  const std::size_t n_rb = ch.n_rb;
  const double n0 = config.noise_watts();
  const double p_max = config.p_max_watts();
  const std::vector<double> powers = detail::mtd_powers(config, ch, k);

  std::vector<double> values(n_rb * k);
  for (std::size_t n = 0; n < n_rb; ++n) {
    for (std::size_t i = 0; i < k; ++i) values[n * k + i] = powers[i] * ch.gain(n, i);
  }
  const InterferenceMatrix matrix(n_rb, k, std::move(values));

  Assignment assignment;
  if (scheduling == Scheduling::kRandom) {
    assignment = detail::random_assignment(n_rb, k, ch.drop_seed);
  } else if (n_rb == 1) {
    assignment.rb_to_mtd = {select_min_interference(matrix.row(0))};
  } else {
    assignment = match_assignments(matrix);
  }

  DropResult r;
  r.selected_mtd = assignment.rb_to_mtd;
  std::vector<double> sinrs(n_rb);
  const LinkBudget mta_budget{0.0, 0.0, n0, config.i0_watts()};
  for (std::size_t n = 0; n < n_rb; ++n) {
    const double p_c = cu_power_control(ch.h_c[n], n0, config.cu_target_sinr(), p_max);
    const double signal = p_c * ch.h_c[n].squared_norm();
    double interference = 0.0;
    double mta_sinr_db = -std::numeric_limits<double>::infinity();
    double p_k = 0.0;
    if (const auto& m = assignment.rb_to_mtd[n]) {
      interference = matrix(n, *m);
      p_k = powers[*m];
      LinkBudget b = mta_budget;
      b.p_k = p_k;
      mta_sinr_db = linear_to_db(sinr_mta(ch.h_mta[*m], b));
    }
    // Unit-norm beamformer: ||w||^2 = 1 and |w h_c|^2 = ||h_c||^2.
    sinrs[n] = sinr_from_terms(signal, interference, 1.0, n0);
    r.sinr_db.push_back(linear_to_db(sinrs[n]));
    r.effective_interference_w.push_back(interference);
    r.mta_sinr_db.push_back(mta_sinr_db);
    r.mtd_power_w.push_back(p_k);
    if (outage_indicator(sinrs[n], config.delta_th())) r.outage = true;
  }
  r.throughput_bps = throughput(sinrs, config.rb_bandwidth_hz);
  return r;
}

/// One time step: new CU position and channels on every RB, MTD powers per
/// the configured mode, then min-interference scheduling of config.k MTDs.
inline DropResult run_drop(const SimConfig& config, const Deployment& deployment, RandomStream& rng) {
  validate(config);
  const RunGeometry geometry = run_geometry(config, deployment, config.k);
  const DropChannels ch = realize_drop(config, deployment, geometry, config.k, rng);
  return evaluate_drop(config, ch, config.k);
}

/// Calls fn(i) for i in [0, count) on a worker pool. Each index is handled
/// exactly once; results must be written to per-index slots.
template <class Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn&& fn) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

namespace detail {

inline double mean(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

inline double median(std::vector<double> v) {
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  const double upper = v[mid];
  if (v.size() % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

/// 95 % half-width of the sample mean.
inline double ci_halfwidth(std::span<const double> v) {
  if (v.size() < 2) return 0.0;
  const double m = mean(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  const double sd = std::sqrt(ss / static_cast<double>(v.size() - 1));
  return kZ95 * sd / std::sqrt(static_cast<double>(v.size()));
}

inline std::size_t max_k(std::span<const std::size_t> k_values) {
  if (k_values.empty()) throw ConfigError("need at least one K value");
  for (auto k : k_values) {
    if (k < 1) throw ConfigError("K values must be >= 1");
  }
  return *std::max_element(k_values.begin(), k_values.end());
}

}  // namespace detail

/// Single shared RB: cellular SINR statistics per (K, MTD power). In fixed
/// power mode every entry of `power_values_dbm` is a sweep point (empty means
/// the configured power); in controlled mode the sweep has one point per K
/// and its power column reports the mean power of the selected MTD.
inline ExperimentSummary experiment_single_rb(const SimConfig& config, std::span<const std::size_t> k_values,
                                              std::span<const double> power_values_dbm,
                                              ExperimentOptions options = {}) {
  SimConfig cfg = config;
  cfg.n_rb = 1;
  validate(cfg);
  const std::size_t k_max = detail::max_k(k_values);
  std::vector<double> powers(power_values_dbm.begin(), power_values_dbm.end());
  if (cfg.mtd_power_mode == PowerMode::kControlled || powers.empty()) powers = {cfg.mtd_fixed_power_dbm};

  const Deployment deployment = run_deployment(cfg, k_max);
  const RunGeometry geometry = run_geometry(cfg, deployment, k_max);
  const std::size_t points = k_values.size() * powers.size();
  const std::size_t drops = cfg.n_drops;
  std::vector<double> sinr_db(points * drops);
  std::vector<double> selected_power(points * drops);
  std::vector<char> outage(points * drops);

  parallel_for(drops, options.workers, [&](std::size_t d) {
    auto rng = RandomStream::derive(cfg.seed, StreamTag::kDrop, {d});
    const DropChannels ch = realize_drop(cfg, deployment, geometry, k_max, rng);
    SimConfig local = cfg;
    for (std::size_t ki = 0; ki < k_values.size(); ++ki) {
      for (std::size_t pi = 0; pi < powers.size(); ++pi) {
        local.mtd_fixed_power_dbm = powers[pi];
        const DropResult r = evaluate_drop(local, ch, k_values[ki]);
        const std::size_t slot = (ki * powers.size() + pi) * drops + d;
        sinr_db[slot] = r.sinr_db[0];
        selected_power[slot] = r.mtd_power_w[0];
        outage[slot] = r.outage ? 1 : 0;
      }
    }
  });

  ExperimentSummary summary;
  for (std::size_t ki = 0; ki < k_values.size(); ++ki) {
    for (std::size_t pi = 0; pi < powers.size(); ++pi) {
      const std::size_t base = (ki * powers.size() + pi) * drops;
      std::span<const double> s(sinr_db.data() + base, drops);
      SummaryRow row;
      row.k = k_values[ki];
      row.mtd_power_dbm = cfg.mtd_power_mode == PowerMode::kFixed
                              ? powers[pi]
                              : watts_to_dbm(detail::mean({selected_power.data() + base, drops}));
      row.mean_sinr_db = detail::mean(s);
      row.median_sinr_db = detail::median({s.begin(), s.end()});
      row.ci_halfwidth_db = detail::ci_halfwidth(s);
      row.outage_rate = static_cast<double>(std::count(outage.begin() + static_cast<std::ptrdiff_t>(base),
                                                       outage.begin() + static_cast<std::ptrdiff_t>(base + drops), 1)) /
                        static_cast<double>(drops);
      row.drops = drops;
      summary.rows.push_back(row);
    }
  }
  return summary;
}

/// Rate of the CU on all RBs at exactly the target SINR.
inline double target_rate_bps(const SimConfig& config) {
  return static_cast<double>(config.n_rb) * config.rb_bandwidth_hz * std::log2(1.0 + config.cu_target_sinr());
}

/// Multi-RB sharing: mean CU throughput per K with greedy matching, plus the
/// same drops scheduled by a random injective assignment as the baseline.
inline ExperimentSummary experiment_throughput(const SimConfig& config, std::span<const std::size_t> k_values,
                                               ExperimentOptions options = {}) {
  validate(config);
  const std::size_t k_max = detail::max_k(k_values);
  const Deployment deployment = run_deployment(config, k_max);
  const RunGeometry geometry = run_geometry(config, deployment, k_max);
  const std::size_t nk = k_values.size();
  const std::size_t drops = config.n_drops;
  const std::size_t n_rb = config.n_rb;

  // [scheduling][k][drop]
  std::vector<double> rate(2 * nk * drops);
  std::vector<double> selected_power(2 * nk * drops);
  std::vector<double> sinr_db(2 * nk * drops * n_rb);
  std::vector<char> outage(2 * nk * drops);

  parallel_for(drops, options.workers, [&](std::size_t d) {
    auto rng = RandomStream::derive(config.seed, StreamTag::kDrop, {d});
    const DropChannels ch = realize_drop(config, deployment, geometry, k_max, rng);
    for (std::size_t s = 0; s < 2; ++s) {
      const Scheduling sched = s == 0 ? Scheduling::kOpportunistic : Scheduling::kRandom;
      for (std::size_t ki = 0; ki < nk; ++ki) {
        const DropResult r = evaluate_drop(config, ch, k_values[ki], sched);
        const std::size_t slot = (s * nk + ki) * drops + d;
        rate[slot] = r.throughput_bps;
        outage[slot] = r.outage ? 1 : 0;
        selected_power[slot] = std::accumulate(r.mtd_power_w.begin(), r.mtd_power_w.end(), 0.0) /
                               static_cast<double>(n_rb);
        std::copy(r.sinr_db.begin(), r.sinr_db.end(), sinr_db.begin() + static_cast<std::ptrdiff_t>(slot * n_rb));
      }
    }
  });

  const double target = target_rate_bps(config);
  ExperimentSummary summary;
  for (std::size_t s = 0; s < 2; ++s) {
    auto& rows = s == 0 ? summary.rows : summary.baseline_rows;
    for (std::size_t ki = 0; ki < nk; ++ki) {
      const std::size_t base = (s * nk + ki) * drops;
      std::span<const double> r(rate.data() + base, drops);
      std::span<const double> sdb(sinr_db.data() + base * n_rb, drops * n_rb);
      SummaryRow row;
      row.k = k_values[ki];
      row.mtd_power_dbm = config.mtd_power_mode == PowerMode::kFixed
                              ? config.mtd_fixed_power_dbm
                              : watts_to_dbm(detail::mean({selected_power.data() + base, drops}));
      row.mean_sinr_db = detail::mean(sdb);
      row.median_sinr_db = detail::median({sdb.begin(), sdb.end()});
      row.ci_halfwidth_db = detail::ci_halfwidth(sdb);
      row.outage_rate = static_cast<double>(std::count(outage.begin() + static_cast<std::ptrdiff_t>(base),
                                                       outage.begin() + static_cast<std::ptrdiff_t>(base + drops), 1)) /
                        static_cast<double>(drops);
      row.mean_throughput_bps = detail::mean(r);
      row.ci_halfwidth_bps = detail::ci_halfwidth(r);
      row.target_rate_bps = target;
      row.drops = drops;
      rows.push_back(row);
    }
  }
  return summary;
}

struct OutageEstimate {
  double probability = 0.0;
  double ci_halfwidth = 0.0;
};

/// Monte Carlo estimate of P(SINR <= delta_th) on a single RB with the
/// min-interference MTD among the first k.
inline OutageEstimate estimate_outage(const SimConfig& config, std::size_t k, ExperimentOptions options = {}) {
  const std::size_t ks[] = {k};
  const double power[] = {config.mtd_fixed_power_dbm};
  const SummaryRow row = experiment_single_rb(config, ks, power, options).rows.front();
  const double p = row.outage_rate;
  return {p, kZ95 * std::sqrt(p * (1.0 - p) / static_cast<double>(row.drops))};
}

enum class CandidateLayout {
  kFixed,  // the run's deployment: candidates share one MTA cluster
  kIid,    // each candidate placed independently (own MTA draw), so X_i are i.i.d.
};

struct AsymptoticPoint {
  std::size_t k = 0;
  double mc_probability = 0.0;    // P(X_min < delta_i), Monte Carlo
  double closed_form = 0.0;       // 1 - (1 - Phi_hat(delta_i))^k
  bool operator==(const AsymptoticPoint&) const = default;
};

struct AsymptoticResult {
  double single_cdf = 0.0;  // Phi_hat(delta_i) from an independent sample
  std::vector<AsymptoticPoint> points;
  bool operator==(const AsymptoticResult&) const = default;
};

/// P(min of k i.i.d. candidates < delta) given the single-candidate
/// probability phi = P(X < delta).
inline double min_below_probability(double phi, std::size_t k) {
  return 1.0 - std::pow(1.0 - phi, static_cast<double>(k));
}

/// Probability that the best of k candidates meets the interference
/// criterion, X_i = P_k |h_c^H h_ib|^2 / ||h_c||^2 < delta_i, with the
/// configured fixed MTD power. Candidates are nested across k (prefix
/// minima of one draw), so the estimates are monotone in k.
inline AsymptoticResult verify_asymptotic(const SimConfig& config, std::span<const std::size_t> k_values,
                                          double delta_i_w, CandidateLayout layout, std::size_t samples,
                                          ExperimentOptions options = {}) {
  validate(config);
  if (!(delta_i_w > 0.0)) throw ConfigError("delta_i must be > 0");
  if (samples < 1) throw ConfigError("need at least one sample");
  const std::size_t k_max = detail::max_k(k_values);
  const std::size_t nk = k_values.size();
  const double p_k = config.mtd_fixed_power_watts();
  const Deployment deployment = run_deployment(config, layout == CandidateLayout::kFixed ? k_max : 1);
  std::vector<double> fixed_gain;
  if (layout == CandidateLayout::kFixed) fixed_gain = run_geometry(config, deployment, k_max).mtd_bs_gain;

  auto candidate_gain = [&](std::size_t i, RandomStream& rng) {
    if (layout == CandidateLayout::kFixed) return fixed_gain[i];
    const Position mta = detail::sample_mta(config, rng);
    return pathloss_gain(distance_to_bs(detail::sample_mtd(config, mta, rng)), config.min_distance_m);
  };
  auto draw_beamformer = [&](RandomStream& rng) {
    const Position cu = sample_cu_position(config, deployment.mta, rng);
    return mrc_weights(gen_channel(distance_to_bs(cu), config.antennas, rng, config.min_distance_m)).normalized();
  };

  std::vector<char> hit(samples * nk);
  parallel_for(samples, options.workers, [&](std::size_t s) {
    auto rng = RandomStream::derive(config.seed, StreamTag::kAsymptotic, {s});
    const Beamformer w = draw_beamformer(rng);
    double running_min = std::numeric_limits<double>::infinity();
    std::size_t next = 0;
    // k_values need not be sorted; record each prefix when it is reached.
    std::vector<std::size_t> order(nk);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return k_values[a] < k_values[b]; });
    for (std::size_t i = 0; i < k_max; ++i) {
      const double g = candidate_gain(i, rng);
      const ChannelVector h = gen_channel_with_gain(g, config.antennas, rng);
      running_min = std::min(running_min, p_k * beamformed_gain(w, h));
      while (next < nk && k_values[order[next]] == i + 1) {
        hit[s * nk + order[next]] = running_min < delta_i_w ? 1 : 0;
        ++next;
      }
    }
  });

  // Single-candidate CDF from its own stream; the candidate index is drawn
  // uniformly so the fixed layout averages over the whole deployment.
  std::vector<char> below(samples);
  parallel_for(samples, options.workers, [&](std::size_t s) {
    auto rng = RandomStream::derive(config.seed, StreamTag::kAsymptoticCdf, {s});
    const Beamformer w = draw_beamformer(rng);
    const std::size_t i = layout == CandidateLayout::kFixed ? rng.below(k_max) : 0;
    const ChannelVector h = gen_channel_with_gain(candidate_gain(i, rng), config.antennas, rng);
    below[s] = p_k * beamformed_gain(w, h) < delta_i_w ? 1 : 0;
  });

  AsymptoticResult result;
  result.single_cdf = static_cast<double>(std::count(below.begin(), below.end(), 1)) / static_cast<double>(samples);
  for (std::size_t ki = 0; ki < nk; ++ki) {
    std::size_t count = 0;
    for (std::size_t s = 0; s < samples; ++s) count += hit[s * nk + ki] ? 1 : 0;
    AsymptoticPoint p;
    p.k = k_values[ki];
    p.mc_probability = static_cast<double>(count) / static_cast<double>(samples);
    p.closed_form = min_below_probability(result.single_cdf, p.k);
    result.points.push_back(p);
  }
  return result;
}

}  // namespace oso

#endif  // OSO_MONTECARLO_HPP
