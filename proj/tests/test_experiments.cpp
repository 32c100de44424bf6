#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "xxchain/experiments.hpp"

using namespace xxchain;

namespace {

ChainSpec branched_uniform(int n) {
  return make_chain(ChainKind::branched, n, {1.0, 1.0, 1.0, 1.0, 1.0});
}

OptimalPoint point_at(double jm, double tau) {
  return {jm, tau, 0.0, Objective::receiver_eof};
}

}  // namespace

TEST_CASE("disorder study at p=0 reproduces the clean value exactly") {
  const ChainSpec clean = branched_uniform(8);
  const DisorderSummary summary = disorder_study(
      clean, point_at(1.9, 4.0), DisorderSpec{0.0, 77, 50}, {0.0}, 2);
  REQUIRE(summary.samples.size() == 1);
  REQUIRE(summary.samples[0].size() == 50);
  for (double v : summary.samples[0]) CHECK(v == summary.clean_value);
  CHECK(summary.fraction_beating_clean[0] == 0.0);
  CHECK(summary.mean[0] == doctest::Approx(summary.clean_value).epsilon(1e-15));
  CHECK(summary.min[0] == summary.clean_value);
  CHECK(summary.max[0] == summary.clean_value);
}

TEST_CASE("disorder summary aggregates are ordered and complete") {
  const ChainSpec clean = branched_uniform(8);
  const DisorderSummary summary = disorder_study(
      clean, point_at(1.9, 4.0), DisorderSpec{0.0, 5, 40}, {0.01, 0.05}, 2);
  for (std::size_t pi = 0; pi < summary.p_grid.size(); ++pi) {
    CHECK(summary.samples[pi].size() == 40);
    CHECK(summary.min[pi] <= summary.mean[pi]);
    CHECK(summary.mean[pi] <= summary.max[pi]);
    CHECK(summary.fraction_beating_clean[pi] >= 0.0);
    CHECK(summary.fraction_beating_clean[pi] <= 1.0);
    for (double v : summary.samples[pi]) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
}

TEST_CASE("disorder study is independent of the worker count") {
  const ChainSpec clean = branched_uniform(10);
  const auto run = [&](unsigned workers) {
    return disorder_study(clean, point_at(2.2, 6.0), DisorderSpec{0.0, 42, 30},
                          {0.01, 0.03}, workers);
  };
  const DisorderSummary serial = run(1);
  const DisorderSummary threaded = run(4);
  CHECK(serial.clean_value == threaded.clean_value);
  for (std::size_t pi = 0; pi < serial.p_grid.size(); ++pi) {
    for (std::size_t i = 0; i < serial.samples[pi].size(); ++i) {
      CHECK(serial.samples[pi][i] == threaded.samples[pi][i]);
    }
    CHECK(serial.mean[pi] == threaded.mean[pi]);
  }
}

TEST_CASE("disorder study validates its inputs") {
  const ChainSpec clean = branched_uniform(8);
  CHECK_THROWS_AS(disorder_study(clean, point_at(1, 1), DisorderSpec{0, 0, 0},
                                 {0.01}, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(disorder_study(clean, point_at(1, 1), DisorderSpec{0, 0, 4},
                                 {1.0}, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(disorder_study(clean, point_at(1, 1), DisorderSpec{0, 0, 4},
                                 {}, 1),
                  std::invalid_argument);
}

TEST_CASE("perturbation ratios are exactly 1 at p=0") {
  const ChainSpec clean = branched_uniform(8);
  const PerturbationSummary summary =
      perturbation_study(clean, point_at(1.9, 4.0), {0.0}, 25, 13, 2);
  REQUIRE(summary.ratios.size() == 1);
  for (double r : summary.ratios[0]) CHECK(r == 1.0);
  CHECK(summary.mean_ratio[0] == 1.0);
  CHECK(summary.min_ratio[0] == 1.0);
}

TEST_CASE("perturbation study is deterministic and nonnegative") {
  const ChainSpec clean = branched_uniform(10);
  const auto run = [&](unsigned workers) {
    return perturbation_study(clean, point_at(2.2, 6.0), {0.02, 0.10}, 40, 999,
                              workers);
  };
  const PerturbationSummary serial = run(1);
  const PerturbationSummary threaded = run(3);
  for (std::size_t pi = 0; pi < serial.p_grid.size(); ++pi) {
    CHECK(serial.min_ratio[pi] >= 0.0);
    CHECK(serial.min_ratio[pi] <= serial.mean_ratio[pi]);
    for (std::size_t k = 0; k < serial.ratios[pi].size(); ++k) {
      CHECK(serial.ratios[pi][k] == threaded.ratios[pi][k]);
    }
  }
}

TEST_CASE("configuration comparison ranks the equal-ends arrangement first") {
  SweepConfig cfg;
  cfg.jm_lo = -4.0;
  cfg.jm_hi = 4.0;
  cfg.jm_coarse_step = 0.1;
  cfg.jm_refine_step = 0.05;
  cfg.tau_max = 20.0;
  cfg.tau_step = 0.02;
  const auto table = configuration_comparison(10, cfg, 2);
  REQUIRE(table.size() == 6);
  CHECK(table.front().label == "branched_equal");
  for (std::size_t i = 1; i < table.size(); ++i) {
    CHECK(table[i].point.objective_value <=
          table.front().point.objective_value);
  }
  // the standard model transmits strictly less than the equal-ends preset
  for (const ComparisonEntry& entry : table) {
    if (entry.kind == ChainKind::standard) {
      CHECK(entry.point.objective_value <
            table.front().point.objective_value);
    }
  }

  cfg.objective = Objective::receiver_single_fidelity;
  CHECK_THROWS_AS(configuration_comparison(10, cfg, 1), std::invalid_argument);
}

TEST_CASE("single-excitation study bounds the branched model at 1/2") {
  SweepConfig cfg;
  cfg.jm_lo = 0.2;
  cfg.jm_hi = 4.0;
  cfg.jm_coarse_step = 0.05;
  cfg.jm_refine_step = 0.01;
  cfg.tau_max = 25.0;
  cfg.tau_step = 0.01;
  cfg.objective = Objective::receiver_single_fidelity;
  const SingleExcitationResult result = single_excitation_study(10, cfg, 2);
  CHECK(result.branched.objective_value <= 0.5 + 1e-10);
  CHECK(result.standard.objective_value > result.branched.objective_value);
  CHECK(result.standard.objective_value > 0.8);

  cfg.objective = Objective::receiver_eof;
  CHECK_THROWS_AS(single_excitation_study(10, cfg, 1), std::invalid_argument);
}
