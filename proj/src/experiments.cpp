#include "xxchain/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "xxchain/parallel.hpp"
#include "xxchain/rng.hpp"

namespace xxchain {

namespace {

double receiver_eof_at(ReceiverTrace& trace, double tau) {
  const auto [c_n, c_b] = trace.at(tau);
  return eof_from_concurrence(std::min(1.0, 2.0 * std::abs(c_n * c_b)));
}

// EoF of psi_plus transmitted through `spec`, read out at tau.
double clean_eof(const ChainSpec& spec, double tau) {
  const SpectralPropagator prop = diagonalize(build_generator(spec));
  const AmplitudeVector c0 = initial_amplitudes(InitialState::psi_plus(), spec);
  ReceiverTrace trace(prop, c0, spec);
  return receiver_eof_at(trace, tau);
}

void check_p_grid(const std::vector<double>& p_grid) {
  if (p_grid.empty()) throw std::invalid_argument("p grid must not be empty");
  for (double p : p_grid) {
    if (!(p >= 0.0 && p < 1.0)) {
      throw std::invalid_argument("p values must lie in [0, 1), got " +
                                  std::to_string(p));
    }
  }
}

}  // namespace

DisorderSummary disorder_study(const ChainSpec& clean, const OptimalPoint& point,
                               const DisorderSpec& d,
                               const std::vector<double>& p_grid,
                               unsigned workers) {
  if (!clean.clean()) {
    throw std::invalid_argument("disorder_study expects a clean ChainSpec");
  }
  if (d.n_realizations <= 0) {
    throw std::invalid_argument("n_realizations must be positive");
  }
  check_p_grid(p_grid);

  const ChainSpec base = with_jm(clean, point.jm_star);
  const int n = d.n_realizations;

  DisorderSummary summary;
  summary.p_grid = p_grid;
  summary.clean_value = clean_eof(base, point.tau_star);
  summary.samples.assign(p_grid.size(), std::vector<double>(n, 0.0));

  parallel_for(p_grid.size() * static_cast<std::size_t>(n), workers,
               [&](std::size_t task) {
                 const std::size_t pi = task / n;
                 const int i = static_cast<int>(task % n);
                 const DisorderSpec realization{p_grid[pi], d.base_seed, n};
                 const ChainSpec disordered =
                     sample_disorder(base, realization, i);
                 const SpectralPropagator prop =
                     diagonalize(build_generator(disordered));
                 const AmplitudeVector c0 =
                     initial_amplitudes(InitialState::psi_plus(), disordered);
                 ReceiverTrace trace(prop, c0, disordered);
                 summary.samples[pi][i] = receiver_eof_at(trace, point.tau_star);
               });

  for (const std::vector<double>& row : summary.samples) {
    double sum = 0.0;
    int beating = 0;
    for (double v : row) {
      sum += v;
      if (v > summary.clean_value) ++beating;
    }
    summary.mean.push_back(sum / n);
    summary.min.push_back(*std::min_element(row.begin(), row.end()));
    summary.max.push_back(*std::max_element(row.begin(), row.end()));
    summary.fraction_beating_clean.push_back(static_cast<double>(beating) / n);
  }
  return summary;
}

PerturbationSummary perturbation_study(const ChainSpec& clean,
                                       const OptimalPoint& point,
                                       const std::vector<double>& p_grid,
                                       int n_per_p, std::uint64_t base_seed,
                                       unsigned workers) {
  if (!clean.clean()) {
    throw std::invalid_argument("perturbation_study expects a clean ChainSpec");
  }
  if (n_per_p <= 0) throw std::invalid_argument("n_per_p must be positive");
  check_p_grid(p_grid);

  const ChainSpec base = with_jm(clean, point.jm_star);
  const SpectralPropagator prop = diagonalize(build_generator(base));

  PerturbationSummary summary;
  summary.p_grid = p_grid;
  summary.clean_value = clean_eof(base, point.tau_star);
  summary.ratios.assign(p_grid.size(), std::vector<double>(n_per_p, 0.0));

  parallel_for(
      p_grid.size() * static_cast<std::size_t>(n_per_p), workers,
      [&](std::size_t task) {
        const std::size_t pi = task / n_per_p;
        const int k = static_cast<int>(task % n_per_p);
        RngStream stream{base_seed, static_cast<std::uint64_t>(pi),
                         static_cast<std::uint64_t>(k)};
        const double p = summary.p_grid[pi];
        double delta_alpha = 0.0, delta_gamma = 0.0;
        for (int attempt = 0;; ++attempt) {
          delta_alpha = stream.next_symmetric(p);
          delta_gamma = stream.next_symmetric(p);
          if ((1.0 + delta_alpha) <= std::sqrt(2.0)) break;  // alpha <= 1
          if (attempt > 64) {
            throw std::runtime_error("perturbation draw failed to produce a valid state");
          }
        }
        const AmplitudeVector c0 = initial_amplitudes(
            InitialState::perturbed(delta_alpha, delta_gamma), base);
        ReceiverTrace trace(prop, c0, base);
        summary.ratios[pi][k] =
            receiver_eof_at(trace, point.tau_star) / summary.clean_value;
      });

  for (const std::vector<double>& row : summary.ratios) {
    summary.mean_ratio.push_back(
        std::accumulate(row.begin(), row.end(), 0.0) / n_per_p);
    summary.min_ratio.push_back(*std::min_element(row.begin(), row.end()));
  }
  return summary;
}

std::vector<ComparisonEntry> configuration_comparison(int n_chain,
                                                      const SweepConfig& cfg,
                                                      unsigned workers) {
  if (cfg.objective != Objective::receiver_eof) {
    throw std::invalid_argument(
        "configuration_comparison optimizes the receiver EoF");
  }

  // End-coupling presets; the first is the arrangement with all four end
  // couplings equal to J, the others are sign-flipped and 2:1 variants.
  const std::vector<ComparisonEntry> presets = {
      {"branched_equal", ChainKind::branched, {1.0, 1.0, 1.0, 1.0, 1.0}, {}},
      {"branched_flipped_branches", ChainKind::branched,
       {1.0, -1.0, 1.0, 1.0, -1.0}, {}},
      {"branched_double_branches", ChainKind::branched,
       {1.0, 2.0, 1.0, 1.0, 2.0}, {}},
      {"branched_half_branches", ChainKind::branched,
       {2.0, 1.0, 1.0, 2.0, 1.0}, {}},
      {"standard_equal", ChainKind::standard, {1.0, 0.0, 1.0, 1.0, 0.0}, {}},
      {"standard_double_ends", ChainKind::standard, {2.0, 0.0, 1.0, 2.0, 0.0}, {}},
  };

  std::vector<ComparisonEntry> results = presets;
  for (ComparisonEntry& entry : results) {
    const ChainSpec spec = make_chain(entry.kind, n_chain, entry.couplings);
    entry.point = optimize(spec, InitialState::psi_plus(), cfg, workers);
  }
  std::stable_sort(results.begin(), results.end(),
                   [](const ComparisonEntry& a, const ComparisonEntry& b) {
                     return a.point.objective_value > b.point.objective_value;
                   });
  return results;
}

SingleExcitationResult single_excitation_study(int n_chain,
                                               const SweepConfig& cfg,
                                               unsigned workers) {
  if (cfg.objective != Objective::receiver_single_fidelity) {
    throw std::invalid_argument(
        "single_excitation_study optimizes the single-site fidelity");
  }
  const ChainSpec branched =
      make_chain(ChainKind::branched, n_chain, {1.0, 1.0, 1.0, 1.0, 1.0});
  const ChainSpec standard =
      make_chain(ChainKind::standard, n_chain, {1.0, 0.0, 1.0, 1.0, 0.0});
  const InitialState state = InitialState::single_excitation();
  return {optimize(branched, state, cfg, workers),
          optimize(standard, state, cfg, workers)};
}

}  // namespace xxchain
