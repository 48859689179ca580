#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "oso/montecarlo.hpp"

namespace oso {
namespace {

SimConfig small_config() {
  SimConfig c;
  c.n_drops = 400;
  c.k = 50;
  c.seed = 77;
  return c;
}

DropResult drop(const SimConfig& c, std::uint64_t index = 0) {
  const Deployment d = run_deployment(c, c.k);
  auto rng = RandomStream::derive(c.seed, StreamTag::kDrop, {index});
  return run_drop(c, d, rng);
}

TEST(RunDrop, SingleCandidateIsAlwaysSelected) {
  SimConfig c = small_config();
  c.k = 1;
  c.n_rb = 1;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto r = drop(c, i);
    ASSERT_EQ(r.selected_mtd.size(), 1u);
    EXPECT_EQ(r.selected_mtd[0], 0u);
  }
}

TEST(RunDrop, SilentMtdsLeaveTheTargetIntact) {
  SimConfig c = small_config();
  c.mtd_fixed_power_dbm = -INFINITY;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto r = drop(c, i);
    ASSERT_EQ(r.sinr_db.size(), c.n_rb);
    for (double s : r.sinr_db) EXPECT_NEAR(s, c.cu_target_sinr_db, 1e-9);
    EXPECT_NEAR(r.throughput_bps, target_rate_bps(c), 1e-9 * target_rate_bps(c));
    EXPECT_FALSE(r.outage);
  }
}

TEST(RunDrop, Deterministic) {
  const SimConfig c = small_config();
  EXPECT_EQ(drop(c, 3), drop(c, 3));
  EXPECT_NE(drop(c, 3), drop(c, 4));
}

TEST(RunDrop, ShapesAndInjectivity) {
  SimConfig c = small_config();
  c.k = 30;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const auto r = drop(c, i);
    ASSERT_EQ(r.sinr_db.size(), c.n_rb);
    ASSERT_EQ(r.selected_mtd.size(), c.n_rb);
    ASSERT_EQ(r.effective_interference_w.size(), c.n_rb);
    ASSERT_EQ(r.mta_sinr_db.size(), c.n_rb);
    std::set<std::size_t> used;
    for (const auto& m : r.selected_mtd) {
      ASSERT_TRUE(m.has_value());
      EXPECT_TRUE(used.insert(*m).second);
    }
    for (std::size_t n = 0; n < c.n_rb; ++n) {
      EXPECT_LE(r.sinr_db[n], c.cu_target_sinr_db + 1e-9);
      EXPECT_GE(r.effective_interference_w[n], 0.0);
    }
  }
}

TEST(RunDrop, FewerMtdsThanRbsLeaveRbsClean) {
  SimConfig c = small_config();
  c.k = 5;
  const auto r = drop(c, 1);
  EXPECT_EQ(std::count_if(r.selected_mtd.begin(), r.selected_mtd.end(), [](auto& m) { return m.has_value(); }), 5);
  for (std::size_t n = 0; n < c.n_rb; ++n) {
    if (!r.selected_mtd[n]) {
      EXPECT_NEAR(r.sinr_db[n], c.cu_target_sinr_db, 1e-9);
      EXPECT_EQ(r.effective_interference_w[n], 0.0);
      EXPECT_EQ(r.mta_sinr_db[n], -INFINITY);
    }
  }
}

TEST(RunDrop, SingleRbPicksTheSmallestInterferer) {
  SimConfig c = small_config();
  c.n_rb = 1;
  const Deployment d = run_deployment(c, c.k);
  const RunGeometry g = run_geometry(c, d, c.k);
  for (std::uint64_t i = 0; i < 30; ++i) {
    auto rng_a = RandomStream::derive(c.seed, StreamTag::kDrop, {i});
    auto rng_b = rng_a;
    const DropChannels ch = realize_drop(c, d, g, c.k, rng_a);
    const DropResult r = run_drop(c, d, rng_b);
    double best = INFINITY;
    for (std::size_t k = 0; k < c.k; ++k) best = std::min(best, c.mtd_fixed_power_watts() * ch.gain(0, k));
    EXPECT_EQ(r.effective_interference_w[0], best);
    // SINR from the MRC closed form with the CU's power-controlled level.
    const double p_c = cu_power_control(ch.h_c[0], c.noise_watts(), c.cu_target_sinr(), c.p_max_watts());
    const double expected = p_c * ch.h_c[0].squared_norm() / (best + c.noise_watts());
    EXPECT_NEAR(r.sinr_db[0], linear_to_db(expected), 1e-9);
  }
}

TEST(RunDrop, PrefixOfLargerRealizationMatches) {
  SimConfig c = small_config();
  c.n_rb = 4;
  const Deployment big = run_deployment(c, 200);
  const RunGeometry g = run_geometry(c, big, 200);
  for (std::uint64_t i = 0; i < 10; ++i) {
    auto rng_a = RandomStream::derive(c.seed, StreamTag::kDrop, {i});
    auto rng_b = rng_a;
    const DropChannels ch = realize_drop(c, big, g, 200, rng_a);
    const DropResult direct = run_drop(c, run_deployment(c, c.k), rng_b);
    EXPECT_EQ(evaluate_drop(c, ch, c.k), direct);
  }
}

TEST(RunDrop, ControlledPowerMeetsMtaTargetWhenUncapped) {
  SimConfig c = small_config();
  c.mtd_power_mode = PowerMode::kControlled;
  c.p_max_dbm = 60.0;
  const auto r = drop(c, 2);
  for (std::size_t n = 0; n < c.n_rb; ++n) EXPECT_NEAR(r.mta_sinr_db[n], c.mtd_target_sinr_db, 1e-9);
}

TEST(SingleRb, MoreCandidatesLessDegradation) {
  SimConfig c = small_config();
  c.n_drops = 1000;
  const std::size_t ks[] = {1, 10, 100, 1000};
  const double p[] = {0.0};
  const auto s = experiment_single_rb(c, ks, p);
  ASSERT_EQ(s.rows.size(), 4u);
  for (std::size_t i = 1; i < s.rows.size(); ++i) {
    EXPECT_GT(s.rows[i].median_sinr_db, s.rows[i - 1].median_sinr_db);
  }
  for (const auto& r : s.rows) {
    EXPECT_GE(r.outage_rate, 0.0);
    EXPECT_LE(r.outage_rate, 1.0);
    EXPECT_GE(r.ci_halfwidth_db, 0.0);
    EXPECT_LE(r.median_sinr_db, c.cu_target_sinr_db + 1e-9);
  }
}

TEST(SingleRb, MeanSinrFallsWithFixedPower) {
  SimConfig c = small_config();
  const std::size_t ks[] = {20};
  const double p[] = {-30.0, -20.0, -10.0, 0.0, 10.0, 20.0};
  const auto s = experiment_single_rb(c, ks, p);
  ASSERT_EQ(s.rows.size(), 6u);
  for (std::size_t i = 1; i < s.rows.size(); ++i) {
    EXPECT_EQ(s.rows[i].mtd_power_dbm, p[i]);
    EXPECT_LE(s.rows[i].mean_sinr_db, s.rows[i - 1].mean_sinr_db);
  }
}

TEST(SingleRb, RejectsEmptyKList) {
  const SimConfig c = small_config();
  EXPECT_THROW(experiment_single_rb(c, {}, {}), ConfigError);
  const std::size_t zero[] = {0};
  EXPECT_THROW(experiment_single_rb(c, zero, {}), ConfigError);
}

TEST(SingleRb, ConfidenceShrinksWithDrops) {
  SimConfig c = small_config();
  const std::size_t ks[] = {10};
  c.n_drops = 100;
  const double small = experiment_single_rb(c, ks, {}).rows[0].ci_halfwidth_db;
  c.n_drops = 10000;
  const double large = experiment_single_rb(c, ks, {}).rows[0].ci_halfwidth_db;
  const double ratio = small / large;  // ideally sqrt(100) = 10
  EXPECT_GT(ratio, 5.0);
  EXPECT_LT(ratio, 20.0);
}

TEST(Determinism, IndependentOfWorkerCount) {
  SimConfig c = small_config();
  const std::size_t ks[] = {1, 20, 60};
  const double p[] = {-10.0, 0.0};
  EXPECT_EQ(experiment_single_rb(c, ks, p, {1}), experiment_single_rb(c, ks, p, {4}));
  c.n_drops = 50;
  EXPECT_EQ(experiment_throughput(c, ks, {1}), experiment_throughput(c, ks, {3}));
  EXPECT_EQ(verify_asymptotic(c, ks, c.delta_i_watts(), CandidateLayout::kIid, 300, {1}),
            verify_asymptotic(c, ks, c.delta_i_watts(), CandidateLayout::kIid, 300, {5}));
}

TEST(Outage, ExtremeThresholds) {
  SimConfig c = small_config();
  c.delta_th_db = -100.0;
  EXPECT_EQ(estimate_outage(c, 10).probability, 0.0);
  c.delta_th_db = 100.0;
  EXPECT_EQ(estimate_outage(c, 10).probability, 1.0);
}

TEST(Outage, MonotoneInThreshold) {
  SimConfig c = small_config();
  double prev = 0.0;
  for (double th : {0.0, 3.0, 6.0, 8.0, 9.0, 9.5, 9.9, 10.5}) {
    c.delta_th_db = th;
    const double p = estimate_outage(c, 5).probability;
    EXPECT_GE(p, prev);
    EXPECT_GE(p, 0.0);
    EXPECT_LE(p, 1.0);
    prev = p;
  }
}

// Independent oracle: without interference the SINR is min(target,
// p_max g(r) ||h||^2 / N0) with ||h||^2 ~ Gamma(M, 1) and r uniform on the
// annulus [d_min, R]. Integrate the Gamma CDF over r with Simpson's rule.
double interference_free_outage(const SimConfig& c) {
  if (c.delta_th_db >= c.cu_target_sinr_db) return 1.0;
  auto gamma_cdf = [&](double x) {
    double term = 1.0, sum = 1.0;
    for (std::size_t j = 1; j < c.antennas; ++j) {
      term *= x / static_cast<double>(j);
      sum += term;
    }
    return 1.0 - std::exp(-x) * sum;
  };
  const double a = c.min_distance_m, b = c.cell_radius_m;
  auto integrand = [&](double r) {
    const double g = std::pow(10.0, -(128.1 + 36.7 * std::log10(r / 1000.0)) / 10.0);
    const double x = c.delta_th() * c.noise_watts() / (c.p_max_watts() * g);
    return gamma_cdf(x) * 2.0 * r / (b * b - a * a);
  };
  constexpr int kIntervals = 20000;
  const double h = (b - a) / kIntervals;
  double s = integrand(a) + integrand(b);
  for (int i = 1; i < kIntervals; ++i) s += (i % 2 ? 4.0 : 2.0) * integrand(a + i * h);
  return s * h / 3.0;
}

TEST(Outage, InterferenceFreeMatchesNumericIntegration) {
  SimConfig c = small_config();
  c.mtd_fixed_power_dbm = -INFINITY;
  c.cu_mta_exclusion_m = 0.0;
  c.p_max_dbm = -5.0;  // cap binds for far CUs
  c.n_drops = 20000;
  const double oracle = interference_free_outage(c);
  ASSERT_GT(oracle, 0.05);
  ASSERT_LT(oracle, 0.95);
  const auto est = estimate_outage(c, 3);
  const double sigma = std::sqrt(oracle * (1.0 - oracle) / static_cast<double>(c.n_drops));
  EXPECT_NEAR(est.probability, oracle, 4.0 * sigma);
}

TEST(Throughput, TargetRateAndOrdering) {
  SimConfig c = small_config();
  // 20 * 180e3 * log2(11), evaluated independently.
  EXPECT_NEAR(target_rate_bps(c), 12453953.82709427, 1e-5);
  c.n_drops = 100;
  const std::size_t ks[] = {20, 100, 400};
  const auto s = experiment_throughput(c, ks);
  ASSERT_EQ(s.rows.size(), 3u);
  ASSERT_EQ(s.baseline_rows.size(), 3u);
  EXPECT_LT(s.baseline_rows[0].mean_throughput_bps, s.rows[0].mean_throughput_bps);
  for (std::size_t i = 1; i < 3; ++i) EXPECT_GE(s.rows[i].mean_throughput_bps, s.rows[i - 1].mean_throughput_bps);
  for (const auto& r : s.rows) EXPECT_LE(r.mean_throughput_bps, r.target_rate_bps * (1.0 + 1e-12));
}

TEST(Throughput, NoInterferenceGivesTargetRate) {
  SimConfig c = small_config();
  c.mtd_fixed_power_dbm = -INFINITY;
  c.n_drops = 50;
  const std::size_t ks[] = {20};
  const auto s = experiment_throughput(c, ks);
  EXPECT_NEAR(s.rows[0].mean_throughput_bps, target_rate_bps(c), 1e-9 * target_rate_bps(c));
}

TEST(Asymptotic, ClosedFormOfTheMinimum) {
  EXPECT_DOUBLE_EQ(min_below_probability(0.5, 3), 0.875);
  EXPECT_DOUBLE_EQ(min_below_probability(0.0, 100), 0.0);
  EXPECT_DOUBLE_EQ(min_below_probability(1.0, 1), 1.0);
}

TEST(Asymptotic, MonotoneAndConsistentForIidCandidates) {
  SimConfig c = small_config();
  c.delta_i_dbm = -135.0;  // tight enough that small K stays well below 1
  const std::size_t ks[] = {1, 2, 5, 10};
  const auto a = verify_asymptotic(c, ks, c.delta_i_watts(), CandidateLayout::kIid, 20000);
  ASSERT_EQ(a.points.size(), 4u);
  EXPECT_GT(a.single_cdf, 0.0);
  EXPECT_LT(a.single_cdf, 0.9);
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    if (i > 0) {
      EXPECT_GE(a.points[i].mc_probability, a.points[i - 1].mc_probability);
    }
    EXPECT_NEAR(a.points[i].mc_probability, a.points[i].closed_form, 0.02) << "k=" << a.points[i].k;
  }
}

TEST(Asymptotic, UnsortedKValuesAreHandled) {
  SimConfig c = small_config();
  const std::size_t sorted[] = {1, 5, 20};
  const std::size_t shuffled[] = {20, 1, 5};
  const auto a = verify_asymptotic(c, sorted, c.delta_i_watts(), CandidateLayout::kFixed, 500);
  const auto b = verify_asymptotic(c, shuffled, c.delta_i_watts(), CandidateLayout::kFixed, 500);
  EXPECT_EQ(a.points[0], b.points[1]);
  EXPECT_EQ(a.points[1], b.points[2]);
  EXPECT_EQ(a.points[2], b.points[0]);
}

TEST(Asymptotic, RejectsNonPositiveThreshold) {
  const SimConfig c = small_config();
  const std::size_t ks[] = {1};
  EXPECT_THROW(verify_asymptotic(c, ks, 0.0, CandidateLayout::kIid, 10), ConfigError);
}

}  // namespace
}  // namespace oso
