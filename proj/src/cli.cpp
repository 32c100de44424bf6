#include "xxchain/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xxchain/config.hpp"
#include "xxchain/csv.hpp"
#include "xxchain/experiments.hpp"
#include "xxchain/manifest.hpp"
#include "xxchain/parallel.hpp"
#include "xxchain/svg_plot.hpp"
#include "xxchain/sweep_optimizer.hpp"
#include "xxchain/version.hpp"

namespace fs = std::filesystem;

namespace xxchain {

namespace {

struct CommandContext {
  Config config;
  std::string out_dir;
  std::uint64_t base_seed = 0;
  unsigned workers = 1;
};

struct CommandResult {
  std::vector<std::string> outputs;
  int exit_code = 0;
  std::string message;
};

ChainSpec chain_from_config(const Config& cfg) {
  const ChainKind kind =
      chain_kind_from_name(cfg.require_string("chain", "kind"));
  const int n_chain = static_cast<int>(cfg.require_integer("chain", "n_chain"));
  CouplingSet c;
  c.j_a = cfg.get_number("chain", "j_a", 1.0);
  c.j_b = cfg.get_number("chain", "j_b", 1.0);
  c.j_m = cfg.get_number("chain", "j_m", 1.0);
  const double tilde_default = kind == ChainKind::branched ? 1.0 : 0.0;
  c.j_a_tilde = cfg.get_number("chain", "j_a_tilde", tilde_default);
  c.j_b_tilde = cfg.get_number("chain", "j_b_tilde", tilde_default);
  return make_chain(kind, n_chain, c);
}

InitialState state_from_config(const Config& cfg, const std::string& section,
                               const std::string& fallback) {
  const std::string name = cfg.get_string(section, "state", fallback);
  return initial_state_from_name(name,
                                 cfg.get_number(section, "delta_alpha", 0.0),
                                 cfg.get_number(section, "delta_gamma", 0.0));
}

SweepConfig sweep_from_config(const Config& cfg, const std::string& section) {
  SweepConfig sc;
  sc.jm_lo = cfg.require_number(section, "jm_lo");
  sc.jm_hi = cfg.require_number(section, "jm_hi");
  sc.jm_coarse_step = cfg.get_number(section, "jm_coarse_step", 0.01);
  sc.jm_refine_step = cfg.get_number(section, "jm_refine_step", 0.001);
  sc.tau_max = cfg.require_number(section, "tau_max");
  sc.tau_step = cfg.get_number(section, "tau_step", 0.01);
  sc.objective = objective_from_name(
      cfg.get_string(section, "objective", "receiver_eof"));
  return sc;
}

std::vector<double> p_grid_from_config(const Config& cfg,
                                       const std::string& section,
                                       double default_lo, double default_hi,
                                       double default_step) {
  if (cfg.has(section, "p_values")) {
    return cfg.require_number_list(section, "p_values");
  }
  const double lo = cfg.get_number(section, "p_lo", default_lo);
  const double hi = cfg.get_number(section, "p_hi", default_hi);
  const double step = cfg.get_number(section, "p_step", default_step);
  if (step <= 0.0) {
    throw std::invalid_argument("field 'p_step' in section [" + section +
                                "] must be positive");
  }
  std::vector<double> grid;
  const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
  for (std::size_t i = 0; i <= n; ++i) grid.push_back(lo + static_cast<double>(i) * step);
  return grid;
}

void save_csv(const CsvWriter& csv, const CommandContext& ctx,
              const std::string& file, std::vector<std::string>& outputs) {
  csv.save((fs::path(ctx.out_dir) / file).string());
  outputs.push_back(file);
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

CommandResult cmd_trace(const CommandContext& ctx) {
  const ChainSpec spec = chain_from_config(ctx.config);
  const InitialState state = state_from_config(ctx.config, "trace", "psi_plus");
  const double tau_max = ctx.config.require_number("trace", "tau_max");
  const double tau_step = ctx.config.get_number("trace", "tau_step", 0.01);

  const auto records = time_trace(spec, state, tau_max, tau_step);
  CsvWriter csv({"tau", "concurrence", "eof", "fidelity"});
  for (const TransmissionRecord& r : records) {
    csv.add_row({format_number(r.tau), format_number(r.concurrence),
                 format_number(r.eof), format_number(r.fidelity)});
  }

  CommandResult result;
  save_csv(csv, ctx, "trace.csv", result.outputs);
  double peak = 0.0;
  for (const TransmissionRecord& r : records) peak = std::max(peak, r.eof);
  std::cout << "trace: " << records.size() << " samples, peak EoF "
            << format_number(peak) << "\n";
  return result;
}

CommandResult cmd_sweep(const CommandContext& ctx) {
  const ChainSpec spec = chain_from_config(ctx.config);
  const SweepConfig sc = sweep_from_config(ctx.config, "sweep");
  const std::string default_state = sc.objective == Objective::receiver_eof
                                        ? "psi_plus"
                                        : "single_excitation";
  const InitialState state =
      state_from_config(ctx.config, "sweep", default_state);

  const SweepResult result = sweep(spec, state, sc, ctx.workers);

  CsvWriter samples({"jm", "tau_star", "objective"});
  for (const JmSample& s : result.samples) {
    samples.add_row({format_number(s.jm), format_number(s.tau_star),
                     format_number(s.objective_value)});
  }
  CsvWriter optimum({"jm_star", "tau_star", "objective_value", "objective"});
  optimum.add_row({format_number(result.best.jm_star),
                   format_number(result.best.tau_star),
                   format_number(result.best.objective_value),
                   objective_name(result.best.objective)});

  CommandResult out;
  save_csv(samples, ctx, "sweep.csv", out.outputs);
  save_csv(optimum, ctx, "optimum.csv", out.outputs);
  std::cout << "sweep: optimum " << objective_name(sc.objective) << " = "
            << format_number(result.best.objective_value)
            << " at J_m = " << format_number(result.best.jm_star)
            << ", Jt/hbar = " << format_number(result.best.tau_star) << "\n";
  return out;
}

CommandResult cmd_compare(const CommandContext& ctx) {
  const int n_chain =
      static_cast<int>(ctx.config.require_integer("compare", "n_chain"));
  SweepConfig sc;
  sc.jm_lo = ctx.config.get_number("compare", "jm_lo", -50.0);
  sc.jm_hi = ctx.config.get_number("compare", "jm_hi", 50.0);
  sc.jm_coarse_step = ctx.config.get_number("compare", "jm_coarse_step", 0.01);
  sc.jm_refine_step = ctx.config.get_number("compare", "jm_refine_step", 0.001);
  sc.tau_max =
      ctx.config.get_number("compare", "tau_max", 25.0 * std::numbers::pi);
  sc.tau_step = ctx.config.get_number("compare", "tau_step", 0.01);

  const auto table = configuration_comparison(n_chain, sc, ctx.workers);

  CsvWriter csv({"rank", "label", "kind", "jm_star", "tau_star", "eof"});
  for (std::size_t i = 0; i < table.size(); ++i) {
    const ComparisonEntry& e = table[i];
    csv.add_row({std::to_string(i + 1), e.label, chain_kind_name(e.kind),
                 format_number(e.point.jm_star), format_number(e.point.tau_star),
                 format_number(e.point.objective_value)});
  }

  CommandResult out;
  save_csv(csv, ctx, "compare.csv", out.outputs);
  std::cout << "compare: best preset '" << table.front().label << "' with EoF "
            << format_number(table.front().point.objective_value) << "\n";
  return out;
}

CommandResult cmd_disorder(const CommandContext& ctx) {
  const ChainSpec spec = chain_from_config(ctx.config);
  OptimalPoint point;
  point.jm_star =
      ctx.config.get_number("disorder", "jm_star", spec.couplings.j_m);
  point.tau_star = ctx.config.require_number("disorder", "tau_star");
  const int n_realizations = static_cast<int>(
      ctx.config.require_integer("disorder", "n_realizations"));
  const std::vector<double> p_grid =
      p_grid_from_config(ctx.config, "disorder", 0.001, 0.05, 0.001);

  const DisorderSpec d{0.0, ctx.base_seed, n_realizations};
  const DisorderSummary summary =
      disorder_study(spec, point, d, p_grid, ctx.workers);

  CsvWriter samples({"p", "realization", "eof"});
  for (std::size_t pi = 0; pi < summary.p_grid.size(); ++pi) {
    for (std::size_t i = 0; i < summary.samples[pi].size(); ++i) {
      samples.add_row({format_number(summary.p_grid[pi]), std::to_string(i),
                       format_number(summary.samples[pi][i])});
    }
  }
  CsvWriter stats({"p", "mean", "min", "max", "fraction_beating_clean"});
  for (std::size_t pi = 0; pi < summary.p_grid.size(); ++pi) {
    stats.add_row({format_number(summary.p_grid[pi]),
                   format_number(summary.mean[pi]),
                   format_number(summary.min[pi]),
                   format_number(summary.max[pi]),
                   format_number(summary.fraction_beating_clean[pi])});
  }

  CommandResult out;
  save_csv(samples, ctx, "disorder_samples.csv", out.outputs);
  save_csv(stats, ctx, "disorder_summary.csv", out.outputs);
  std::cout << "disorder: clean EoF " << format_number(summary.clean_value)
            << ", " << summary.p_grid.size() << " p values x "
            << n_realizations << " realizations\n";
  return out;
}

CommandResult cmd_perturb(const CommandContext& ctx) {
  const ChainSpec spec = chain_from_config(ctx.config);
  OptimalPoint point;
  point.jm_star =
      ctx.config.get_number("perturb", "jm_star", spec.couplings.j_m);
  point.tau_star = ctx.config.require_number("perturb", "tau_star");
  const int n_per_p =
      static_cast<int>(ctx.config.require_integer("perturb", "n_per_p"));
  const std::vector<double> p_grid =
      p_grid_from_config(ctx.config, "perturb", 0.0, 0.10, 0.002);

  const PerturbationSummary summary = perturbation_study(
      spec, point, p_grid, n_per_p, ctx.base_seed, ctx.workers);

  CsvWriter samples({"p", "draw", "eof_ratio"});
  for (std::size_t pi = 0; pi < summary.p_grid.size(); ++pi) {
    for (std::size_t k = 0; k < summary.ratios[pi].size(); ++k) {
      samples.add_row({format_number(summary.p_grid[pi]), std::to_string(k),
                       format_number(summary.ratios[pi][k])});
    }
  }
  CsvWriter stats({"p", "mean_ratio", "min_ratio"});
  for (std::size_t pi = 0; pi < summary.p_grid.size(); ++pi) {
    stats.add_row({format_number(summary.p_grid[pi]),
                   format_number(summary.mean_ratio[pi]),
                   format_number(summary.min_ratio[pi])});
  }

  CommandResult out;
  save_csv(samples, ctx, "perturb_samples.csv", out.outputs);
  save_csv(stats, ctx, "perturb_summary.csv", out.outputs);
  std::cout << "perturb: clean EoF " << format_number(summary.clean_value)
            << ", " << summary.p_grid.size() << " p values x " << n_per_p
            << " draws\n";
  return out;
}

CommandResult cmd_single(const CommandContext& ctx) {
  const int n_chain =
      static_cast<int>(ctx.config.require_integer("single", "n_chain"));
  SweepConfig sc;
  sc.jm_lo = ctx.config.get_number("single", "jm_lo", 0.0);
  sc.jm_hi = ctx.config.get_number("single", "jm_hi", 50.0);
  sc.jm_coarse_step = ctx.config.get_number("single", "jm_coarse_step", 0.01);
  sc.jm_refine_step = ctx.config.get_number("single", "jm_refine_step", 0.001);
  sc.tau_max =
      ctx.config.get_number("single", "tau_max", 25.0 * std::numbers::pi);
  sc.tau_step = ctx.config.get_number("single", "tau_step", 0.01);
  sc.objective = Objective::receiver_single_fidelity;

  const SingleExcitationResult result =
      single_excitation_study(n_chain, sc, ctx.workers);

  CsvWriter csv({"model", "jm_star", "tau_star", "fidelity"});
  csv.add_row({"branched", format_number(result.branched.jm_star),
               format_number(result.branched.tau_star),
               format_number(result.branched.objective_value)});
  csv.add_row({"standard", format_number(result.standard.jm_star),
               format_number(result.standard.tau_star),
               format_number(result.standard.objective_value)});

  CommandResult out;
  save_csv(csv, ctx, "single.csv", out.outputs);
  std::cout << "single: branched fidelity "
            << format_number(result.branched.objective_value) << ", standard "
            << format_number(result.standard.objective_value) << "\n";
  return out;
}

CommandResult cmd_oracle_check(const CommandContext& ctx) {
  const int n_chain =
      static_cast<int>(ctx.config.get_integer("oracle", "n_chain", 4));
  const double tau_max = ctx.config.get_number("oracle", "tau_max", 25.0);
  const int n_samples =
      static_cast<int>(ctx.config.get_integer("oracle", "n_samples", 50));
  const double tolerance = 1e-8;

  CsvWriter csv({"kind", "state", "max_deviation"});
  double worst = 0.0;
  for (ChainKind kind : {ChainKind::branched, ChainKind::standard}) {
    const CouplingSet couplings = kind == ChainKind::branched
                                      ? CouplingSet{1.0, 1.0, 1.0, 1.0, 1.0}
                                      : CouplingSet{1.0, 0.0, 1.0, 1.0, 0.0};
    const ChainSpec spec = make_chain(kind, n_chain, couplings);
    const SpectralPropagator prop = diagonalize(build_generator(spec));
    for (const InitialState& state :
         {InitialState::psi_plus(), InitialState::single_excitation()}) {
      const AmplitudeVector c0 = initial_amplitudes(state, spec);
      double max_dev = 0.0;
      for (int k = 0; k < n_samples; ++k) {
        const double tau = tau_max * (k + 1) / n_samples;
        const AmplitudeVector subspace = evolve(prop, c0, tau);
        const AmplitudeVector full = full_space_oracle(spec, state, tau);
        max_dev = std::max(
            max_dev,
            (subspace.amplitudes - full.amplitudes).cwiseAbs().maxCoeff());
      }
      csv.add_row({chain_kind_name(kind), state.name(),
                   format_number(max_dev)});
      worst = std::max(worst, max_dev);
    }
  }

  CommandResult out;
  save_csv(csv, ctx, "oracle.csv", out.outputs);
  std::cout << "oracle-check: max amplitude deviation "
            << format_number(worst) << " (tolerance " << tolerance << ")\n";
  if (!(worst < tolerance)) {
    out.exit_code = 2;
    out.message = "subspace evolution disagrees with the full-space oracle";
  }
  return out;
}

CommandResult cmd_plot(const std::string& csv_path, const std::string& kind,
                       const std::string& out_dir) {
  const PlotKind plot_kind = plot_kind_from_name(kind);
  const std::string stem = fs::path(csv_path).stem().string();
  const std::string file = stem + ".svg";
  emit_plot(csv_path, plot_kind, (fs::path(out_dir) / file).string());
  std::cout << "plot: wrote " << file << "\n";
  CommandResult out;
  out.outputs.push_back(file);
  return out;
}

int dispatch(const std::string& command, const std::string& config_path,
             const std::string& out_dir, std::uint64_t seed, bool seed_set,
             unsigned workers_flag, const std::string& plot_csv,
             const std::string& plot_kind) {
  const auto t0 = std::chrono::steady_clock::now();

  fs::create_directories(out_dir);

  CommandContext ctx;
  ctx.out_dir = out_dir;
  if (command != "plot") {
    ctx.config = Config::parse_file(config_path);
    ctx.base_seed = seed_set ? seed
                             : static_cast<std::uint64_t>(ctx.config.get_integer(
                                   "run", "base_seed", 0));
    ctx.workers = resolve_workers(
        workers_flag > 0
            ? workers_flag
            : static_cast<unsigned>(ctx.config.get_integer("run", "workers", 0)));
  } else {
    ctx.workers = 1;
  }

  CommandResult result;
  if (command == "trace") result = cmd_trace(ctx);
  else if (command == "sweep") result = cmd_sweep(ctx);
  else if (command == "compare") result = cmd_compare(ctx);
  else if (command == "disorder") result = cmd_disorder(ctx);
  else if (command == "perturb") result = cmd_perturb(ctx);
  else if (command == "single") result = cmd_single(ctx);
  else if (command == "oracle-check") result = cmd_oracle_check(ctx);
  else if (command == "plot") {
    // auxiliary rendering; leaves the numerical run's manifest alone
    return cmd_plot(plot_csv, plot_kind, out_dir).exit_code;
  } else {
    throw std::invalid_argument("unknown command '" + command + "'");
  }

  RunManifest manifest;
  manifest.command = command;
  manifest.config_echo = ctx.config.flattened();
  manifest.base_seed = ctx.base_seed;
  manifest.workers = ctx.workers;
  manifest.duration_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  manifest.output_files = result.outputs;
  manifest.save(out_dir);

  if (result.exit_code != 0) std::cerr << "error: " << result.message << "\n";
  return result.exit_code;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"XX spin-chain Bell-state transfer: simulation and optimization"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  struct {
    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    unsigned workers = 0;
    std::string plot_csv;
    std::string plot_kind;
  } opts;
  bool seed_set = false;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"trace", "time series of the receiver-pair measures"},
      {"sweep", "grid search for the optimal J_m and readout time"},
      {"compare", "optimize the six preset coupling arrangements"},
      {"disorder", "Monte Carlo over static coupling disorder"},
      {"perturb", "input-state perturbation study"},
      {"single", "single-excitation transfer optimization, both models"},
      {"oracle-check", "compare subspace evolution with the full-space oracle"},
  };
  for (const auto& [name, description] : commands) {
    CLI::App* cmd = app.add_subcommand(name, description);
    cmd->add_option("--config", opts.config_path, "configuration file")
        ->required();
    cmd->add_option("--out", opts.out_dir, "output directory")->required();
    cmd->add_option("--seed", opts.seed, "override the configured base seed")
        ->each([&](const std::string&) { seed_set = true; });
    cmd->add_option("--workers", opts.workers,
                    "worker threads (default: XXCHAIN_WORKERS or hardware)");
  }
  CLI::App* plot = app.add_subcommand("plot", "render a result CSV as SVG");
  plot->add_option("--csv", opts.plot_csv, "input CSV file")->required();
  plot->add_option("--kind", opts.plot_kind,
                   "trace, sweep or disorder_scatter")->required();
  plot->add_option("--out", opts.out_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help/--version exit 0; anything else is a usage error
    return app.exit(e) == 0 ? 0 : 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return dispatch(command, opts.config_path, opts.out_dir, opts.seed,
                    seed_set, opts.workers, opts.plot_csv, opts.plot_kind);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace xxchain
