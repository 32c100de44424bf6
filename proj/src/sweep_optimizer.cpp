#include "xxchain/sweep_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "xxchain/parallel.hpp"

namespace xxchain {

std::string objective_name(Objective objective) {
  return objective == Objective::receiver_eof ? "receiver_eof"
                                              : "receiver_single_fidelity";
}

Objective objective_from_name(const std::string& name) {
  if (name == "receiver_eof") return Objective::receiver_eof;
  if (name == "receiver_single_fidelity") return Objective::receiver_single_fidelity;
  throw std::invalid_argument("unknown objective '" + name + "'");
}

namespace {

// Number of samples on the grid lo, lo + step, ..., hi (hi included when it
// falls on the grid within rounding).
std::size_t grid_size(double lo, double hi, double step) {
  if (step <= 0.0) throw std::invalid_argument("grid step must be positive");
  if (hi < lo) return 0;
  return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

double objective_of(Objective objective, std::complex<double> c_n,
                    std::complex<double> c_b) {
  if (objective == Objective::receiver_single_fidelity) return std::norm(c_b);
  const double c = std::min(1.0, 2.0 * std::abs(c_n * c_b));
  return eof_from_concurrence(c);
}

struct Peak {
  double tau = 0.0;
  double value = -1.0;

  void offer(double t, double v) {
    if (v > value) {
      value = v;
      tau = t;
    }
  }
};

// Max over the coarse time grid, then a tenfold finer pass one coarse step
// around the peak. Ascending scan with strict improvement keeps the smallest
// tau on ties.
Peak scan_time(ReceiverTrace& trace, Objective objective, double tau_max,
               double tau_step) {
  Peak peak;
  const std::size_t n = grid_size(0.0, tau_max, tau_step);
  for (std::size_t k = 0; k < n; ++k) {
    const double tau = static_cast<double>(k) * tau_step;
    const auto [c_n, c_b] = trace.at(tau);
    peak.offer(tau, objective_of(objective, c_n, c_b));
  }

  const double fine_step = tau_step / 10.0;
  const double lo = std::max(0.0, peak.tau - tau_step);
  const double hi = std::min(tau_max, peak.tau + tau_step);
  const std::size_t m = grid_size(lo, hi, fine_step);
  Peak refined;
  for (std::size_t k = 0; k < m; ++k) {
    const double tau = lo + static_cast<double>(k) * fine_step;
    const auto [c_n, c_b] = trace.at(tau);
    refined.offer(tau, objective_of(objective, c_n, c_b));
  }
  if (refined.value > peak.value ||
      (refined.value == peak.value && refined.tau < peak.tau)) {
    return refined;
  }
  return peak;
}

JmSample evaluate_jm(const ChainSpec& template_spec, const InitialState& state,
                     const SweepConfig& cfg, double jm) {
  const ChainSpec spec = with_jm(template_spec, jm);
  const SpectralPropagator prop = diagonalize(build_generator(spec));
  const AmplitudeVector c0 = initial_amplitudes(state, spec);
  ReceiverTrace trace(prop, c0, spec);
  const Peak peak = scan_time(trace, cfg.objective, cfg.tau_max, cfg.tau_step);
  return {jm, peak.tau, peak.value};
}

// objective descending, tau ascending, jm ascending
bool better(const JmSample& a, const JmSample& b) {
  if (a.objective_value != b.objective_value)
    return a.objective_value > b.objective_value;
  if (a.tau_star != b.tau_star) return a.tau_star < b.tau_star;
  return a.jm < b.jm;
}

std::vector<JmSample> scan_grid(const ChainSpec& template_spec,
                                const InitialState& state,
                                const SweepConfig& cfg, double lo, double hi,
                                double step, unsigned workers) {
  const std::size_t n = grid_size(lo, hi, step);
  std::vector<JmSample> samples(n);
  parallel_for(n, workers, [&](std::size_t i) {
    const double jm = lo + static_cast<double>(i) * step;
    samples[i] = evaluate_jm(template_spec, state, cfg, jm);
  });
  return samples;
}

void validate(const ChainSpec& template_spec, const SweepConfig& cfg) {
  if (!template_spec.clean()) {
    throw std::invalid_argument("sweep template must be a clean ChainSpec");
  }
  if (cfg.jm_lo > cfg.jm_hi) {
    throw std::invalid_argument("empty J_m grid: jm_lo > jm_hi");
  }
  if (cfg.jm_coarse_step <= 0.0 || cfg.jm_refine_step <= 0.0 ||
      cfg.tau_step <= 0.0) {
    throw std::invalid_argument("sweep steps must be positive");
  }
  if (cfg.jm_refine_step > cfg.jm_coarse_step) {
    throw std::invalid_argument("jm_refine_step must not exceed jm_coarse_step");
  }
  if (cfg.tau_max <= 0.0) {
    throw std::invalid_argument("tau_max must be positive");
  }
}

}  // namespace

std::vector<TransmissionRecord> time_trace(const ChainSpec& spec,
                                           const InitialState& state,
                                           double tau_max, double tau_step) {
  if (tau_step <= 0.0) throw std::invalid_argument("tau_step must be positive");
  if (tau_max < 0.0) throw std::invalid_argument("tau_max must be nonnegative");

  const SpectralPropagator prop = diagonalize(build_generator(spec));
  const AmplitudeVector c0 = initial_amplitudes(state, spec);
  ReceiverTrace trace(prop, c0, spec);

  const std::size_t n = grid_size(0.0, tau_max, tau_step);
  std::vector<TransmissionRecord> records;
  records.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double tau = static_cast<double>(k) * tau_step;
    const auto [c_n, c_b] = trace.at(tau);
    const TwoQubitReducedState reduced{c_n, c_b};
    const double c = std::min(1.0, concurrence_x(reduced));
    records.push_back(
        {tau, c, eof_from_concurrence(c), bell_fidelity(reduced)});
  }
  return records;
}

std::pair<double, double> peak_over_time(const ChainSpec& spec,
                                         const InitialState& state,
                                         Objective objective, double tau_max,
                                         double tau_step) {
  const SpectralPropagator prop = diagonalize(build_generator(spec));
  const AmplitudeVector c0 = initial_amplitudes(state, spec);
  ReceiverTrace trace(prop, c0, spec);
  const Peak peak = scan_time(trace, objective, tau_max, tau_step);
  return {peak.tau, peak.value};
}

SweepResult sweep(const ChainSpec& template_spec, const InitialState& state,
                  const SweepConfig& cfg, unsigned workers) {
  validate(template_spec, cfg);

  // Phase 1: coarse grid.
  std::vector<JmSample> coarse =
      scan_grid(template_spec, state, cfg, cfg.jm_lo, cfg.jm_hi,
                cfg.jm_coarse_step, workers);
  JmSample best = coarse.front();
  for (const JmSample& s : coarse) {
    if (better(s, best)) best = s;
  }

  // Phase 2: refined rescan one coarse step around the winner.
  const double lo = std::max(cfg.jm_lo, best.jm - cfg.jm_coarse_step);
  const double hi = std::min(cfg.jm_hi, best.jm + cfg.jm_coarse_step);
  std::vector<JmSample> refined =
      scan_grid(template_spec, state, cfg, lo, hi, cfg.jm_refine_step, workers);
  for (const JmSample& s : refined) {
    if (better(s, best)) best = s;
  }

  SweepResult result;
  result.best = {best.jm, best.tau_star, best.objective_value, cfg.objective};
  result.samples = std::move(coarse);
  result.samples.insert(result.samples.end(), refined.begin(), refined.end());
  std::sort(result.samples.begin(), result.samples.end(),
            [](const JmSample& a, const JmSample& b) { return a.jm < b.jm; });
  // Drop refined rows that duplicate coarse grid points.
  result.samples.erase(
      std::unique(result.samples.begin(), result.samples.end(),
                  [&](const JmSample& a, const JmSample& b) {
                    return std::abs(a.jm - b.jm) < 0.5 * cfg.jm_refine_step;
                  }),
      result.samples.end());
  return result;
}

OptimalPoint optimize(const ChainSpec& template_spec, const InitialState& state,
                      const SweepConfig& cfg, unsigned workers) {
  return sweep(template_spec, state, cfg, workers).best;
}

}  // namespace xxchain
