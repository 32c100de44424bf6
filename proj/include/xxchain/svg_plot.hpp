#pragma once

#include <string>

namespace xxchain {

enum class PlotKind { trace, sweep, disorder_scatter };

PlotKind plot_kind_from_name(const std::string& name);

// Renders a CSV produced by the harness as a self-contained SVG:
//   trace:            concurrence / EoF / fidelity vs Jt/hbar
//   sweep:            objective vs J_m with the peak annotated
//   disorder_scatter: per-realization EoF vs p plus mean/min/max curves
// Throws std::invalid_argument when the CSV schema does not match the kind.
void emit_plot(const std::string& csv_path, PlotKind kind,
               const std::string& svg_path);

}  // namespace xxchain
