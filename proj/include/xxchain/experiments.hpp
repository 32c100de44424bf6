#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xxchain/chain_model.hpp"
#include "xxchain/sweep_optimizer.hpp"

namespace xxchain {

// Receiver EoF under static disorder, measured at the clean optimum
// (jm_star, tau_star) for every realization.
struct DisorderSummary {
  std::vector<double> p_grid;
  std::vector<std::vector<double>> samples;  // [p index][realization]
  std::vector<double> mean;
  std::vector<double> min;
  std::vector<double> max;
  std::vector<double> fraction_beating_clean;
  double clean_value = 0.0;
};

// EoF of imperfectly prepared input states relative to the clean psi_plus
// run, at the same (jm_star, tau_star).
struct PerturbationSummary {
  std::vector<double> p_grid;
  std::vector<std::vector<double>> ratios;  // [p index][draw]
  std::vector<double> mean_ratio;
  std::vector<double> min_ratio;
  double clean_value = 0.0;
};

// One preset coupling arrangement and its sweep optimum.
struct ComparisonEntry {
  std::string label;
  ChainKind kind = ChainKind::branched;
  CouplingSet couplings;
  OptimalPoint point;
};

struct SingleExcitationResult {
  OptimalPoint branched;
  OptimalPoint standard;
};

// Monte Carlo over disorder realizations: for each p and realization index,
// evolve psi_plus on a freshly sampled disordered chain to point.tau_star
// (J_m fixed at point.jm_star) and record the receiver EoF. Deterministic
// for a fixed base_seed, independent of worker count. d.p is ignored; widths
// come from p_grid.
DisorderSummary disorder_study(const ChainSpec& clean, const OptimalPoint& point,
                               const DisorderSpec& d,
                               const std::vector<double>& p_grid,
                               unsigned workers = 0);

// For each p, draws n_per_p (delta_alpha, delta_gamma) pairs uniform on
// [-p, p]^2, evolves the perturbed input on the clean chain to
// point.tau_star, and records EoF relative to the clean psi_plus run.
// Invalid draws (alpha > 1) are redrawn from the same stream.
PerturbationSummary perturbation_study(const ChainSpec& clean,
                                       const OptimalPoint& point,
                                       const std::vector<double>& p_grid,
                                       int n_per_p, std::uint64_t base_seed,
                                       unsigned workers = 0);

// Optimizes the six preset coupling arrangements (four branched, two
// standard) for psi_plus transmission and returns them sorted by descending
// optimum. cfg.objective must be receiver_eof.
std::vector<ComparisonEntry> configuration_comparison(int n_chain,
                                                      const SweepConfig& cfg,
                                                      unsigned workers = 0);

// Optimizes single-excitation transfer for both models with all end
// couplings at J. cfg.objective must be receiver_single_fidelity.
SingleExcitationResult single_excitation_study(int n_chain,
                                               const SweepConfig& cfg,
                                               unsigned workers = 0);

}  // namespace xxchain
