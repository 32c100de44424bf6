#pragma once

#include <string>
#include <utility>
#include <vector>

#include "xxchain/chain_model.hpp"
#include "xxchain/evolution.hpp"
#include "xxchain/measures.hpp"

namespace xxchain {

enum class Objective { receiver_eof, receiver_single_fidelity };

std::string objective_name(Objective objective);
Objective objective_from_name(const std::string& name);

// Grid-search protocol: a coarse J_m scan, then a refined rescan one coarse
// step around the winner. Time is sampled at tau_step with a tenfold finer
// pass around each per-J_m peak.
struct SweepConfig {
  double jm_lo = 0.0;
  double jm_hi = 0.0;
  double jm_coarse_step = 0.01;
  double jm_refine_step = 0.001;
  double tau_max = 0.0;
  double tau_step = 0.01;
  Objective objective = Objective::receiver_eof;
};

struct OptimalPoint {
  double jm_star = 0.0;
  double tau_star = 0.0;
  double objective_value = 0.0;
  Objective objective = Objective::receiver_eof;
};

// One evaluated J_m grid point.
struct JmSample {
  double jm = 0.0;
  double tau_star = 0.0;
  double objective_value = 0.0;
};

struct SweepResult {
  OptimalPoint best;
  std::vector<JmSample> samples;  // coarse plus refined rows, jm ascending
};

// Full time series of the receiver-pair measures on the grid
// tau = 0, tau_step, ..., tau_max, from a single diagonalization.
std::vector<TransmissionRecord> time_trace(const ChainSpec& spec,
                                           const InitialState& state,
                                           double tau_max, double tau_step);

// (tau_star, value): maximum of the objective over the sampled time grid
// with the refinement pass around the peak; ties resolve to the smallest tau.
std::pair<double, double> peak_over_time(const ChainSpec& spec,
                                         const InitialState& state,
                                         Objective objective, double tau_max,
                                         double tau_step);

// Two-phase grid search over J_m. Pure function of its arguments: the worker
// count changes wall time only. Ties break to smallest tau, then smallest
// J_m.
SweepResult sweep(const ChainSpec& template_spec, const InitialState& state,
                  const SweepConfig& cfg, unsigned workers = 0);

OptimalPoint optimize(const ChainSpec& template_spec, const InitialState& state,
                      const SweepConfig& cfg, unsigned workers = 0);

}  // namespace xxchain
