#include "xxchain/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "xxchain/csv.hpp"

namespace xxchain {

PlotKind plot_kind_from_name(const std::string& name) {
  if (name == "trace") return PlotKind::trace;
  if (name == "sweep") return PlotKind::sweep;
  if (name == "disorder_scatter") return PlotKind::disorder_scatter;
  throw std::invalid_argument("unknown plot kind '" + name + "'");
}

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 30.0;
constexpr double kMarginBottom = 55.0;

struct Series {
  std::string label;
  std::string color;
  std::vector<std::pair<double, double>> points;
  bool scatter = false;
};

std::string fmt(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

// Maps data coordinates onto the SVG viewport and renders axes, series and
// annotations.
class SvgCanvas {
 public:
  SvgCanvas(double x_lo, double x_hi, double y_lo, double y_hi) {
    if (x_hi <= x_lo) {
      x_lo -= 1.0;
      x_hi += 1.0;
    }
    if (y_hi <= y_lo) {
      y_lo -= 1.0;
      y_hi += 1.0;
    }
    x_lo_ = x_lo;
    x_hi_ = x_hi;
    y_lo_ = y_lo;
    y_hi_ = y_hi;
  }

  double px(double x) const {
    return kMarginLeft +
           (x - x_lo_) / (x_hi_ - x_lo_) * (kWidth - kMarginLeft - kMarginRight);
  }
  double py(double y) const {
    return kHeight - kMarginBottom -
           (y - y_lo_) / (y_hi_ - y_lo_) *
               (kHeight - kMarginTop - kMarginBottom);
  }

  void draw_axes(std::ostringstream& out, const std::string& x_label,
                 const std::string& y_label) const {
    out << "<rect x='" << kMarginLeft << "' y='" << kMarginTop << "' width='"
        << kWidth - kMarginLeft - kMarginRight << "' height='"
        << kHeight - kMarginTop - kMarginBottom
        << "' fill='none' stroke='black'/>\n";
    for (int i = 0; i <= 5; ++i) {
      const double fx = x_lo_ + (x_hi_ - x_lo_) * i / 5.0;
      const double fy = y_lo_ + (y_hi_ - y_lo_) * i / 5.0;
      out << "<line x1='" << px(fx) << "' y1='" << kHeight - kMarginBottom
          << "' x2='" << px(fx) << "' y2='" << kHeight - kMarginBottom + 5
          << "' stroke='black'/>\n";
      out << "<text x='" << px(fx) << "' y='" << kHeight - kMarginBottom + 20
          << "' font-size='12' text-anchor='middle'>" << fmt(fx) << "</text>\n";
      out << "<line x1='" << kMarginLeft - 5 << "' y1='" << py(fy) << "' x2='"
          << kMarginLeft << "' y2='" << py(fy) << "' stroke='black'/>\n";
      out << "<text x='" << kMarginLeft - 8 << "' y='" << py(fy) + 4
          << "' font-size='12' text-anchor='end'>" << fmt(fy) << "</text>\n";
    }
    out << "<text x='" << (kMarginLeft + kWidth - kMarginRight) / 2 << "' y='"
        << kHeight - 12 << "' font-size='14' text-anchor='middle'>" << x_label
        << "</text>\n";
    out << "<text x='18' y='" << (kMarginTop + kHeight - kMarginBottom) / 2
        << "' font-size='14' text-anchor='middle' transform='rotate(-90 18 "
        << (kMarginTop + kHeight - kMarginBottom) / 2 << ")'>" << y_label
        << "</text>\n";
  }

  void draw_series(std::ostringstream& out, const Series& s) const {
    if (s.scatter) {
      for (const auto& [x, y] : s.points) {
        out << "<g stroke='" << s.color << "' stroke-width='0.6'>"
            << "<line x1='" << px(x) - 2 << "' y1='" << py(y) - 2 << "' x2='"
            << px(x) + 2 << "' y2='" << py(y) + 2 << "'/>"
            << "<line x1='" << px(x) - 2 << "' y1='" << py(y) + 2 << "' x2='"
            << px(x) + 2 << "' y2='" << py(y) - 2 << "'/></g>\n";
      }
      return;
    }
    if (s.points.size() == 1) {
      const auto& [x, y] = s.points.front();
      out << "<circle cx='" << px(x) << "' cy='" << py(y)
          << "' r='3' fill='" << s.color << "'/>\n";
      return;
    }
    out << "<polyline fill='none' stroke='" << s.color
        << "' stroke-width='1.2' points='";
    for (const auto& [x, y] : s.points) out << px(x) << ',' << py(y) << ' ';
    out << "'/>\n";
  }

  void draw_legend(std::ostringstream& out,
                   const std::vector<Series>& series) const {
    double y = kMarginTop + 16;
    for (const Series& s : series) {
      out << "<line x1='" << kMarginLeft + 10 << "' y1='" << y << "' x2='"
          << kMarginLeft + 34 << "' y2='" << y << "' stroke='" << s.color
          << "' stroke-width='2'/>\n";
      out << "<text x='" << kMarginLeft + 40 << "' y='" << y + 4
          << "' font-size='12'>" << s.label << "</text>\n";
      y += 16;
    }
  }

 private:
  double x_lo_, x_hi_, y_lo_, y_hi_;
};

void write_svg(const std::string& svg_path, const std::vector<Series>& series,
               const std::string& x_label, const std::string& y_label,
               const std::string& annotation) {
  double x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
  bool first = true;
  for (const Series& s : series) {
    for (const auto& [x, y] : s.points) {
      if (first) {
        x_lo = x_hi = x;
        y_lo = y_hi = y;
        first = false;
      }
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  }

  SvgCanvas canvas(x_lo, x_hi, y_lo, y_hi);
  std::ostringstream out;
  out << "<?xml version='1.0' encoding='UTF-8'?>\n"
      << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth
      << "' height='" << kHeight << "' viewBox='0 0 " << kWidth << ' '
      << kHeight << "'>\n<rect width='100%' height='100%' fill='white'/>\n";
  canvas.draw_axes(out, x_label, y_label);
  for (const Series& s : series) canvas.draw_series(out, s);
  canvas.draw_legend(out, series);
  if (!annotation.empty()) {
    out << "<text x='" << kWidth - kMarginRight - 8 << "' y='"
        << kMarginTop + 16 << "' font-size='12' text-anchor='end'>"
        << annotation << "</text>\n";
  }
  out << "</svg>\n";

  std::ofstream file(svg_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + svg_path + "'");
  file << out.str();
}

int require_column(const CsvTable& table, const std::string& name,
                   const std::string& kind) {
  const int col = table.column(name);
  if (col < 0) {
    throw std::invalid_argument("CSV is missing column '" + name +
                                "' required by plot kind '" + kind + "'");
  }
  return col;
}

void plot_trace(const CsvTable& table, const std::string& svg_path) {
  const int tau = require_column(table, "tau", "trace");
  const int conc = require_column(table, "concurrence", "trace");
  const int eof_col = require_column(table, "eof", "trace");
  const int fid = require_column(table, "fidelity", "trace");

  Series s_conc{"concurrence", "#1f77b4", {}, false};
  Series s_eof{"eof", "#d62728", {}, false};
  Series s_fid{"fidelity", "#2ca02c", {}, false};
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const double t = table.number_at(r, tau);
    s_conc.points.emplace_back(t, table.number_at(r, conc));
    s_eof.points.emplace_back(t, table.number_at(r, eof_col));
    s_fid.points.emplace_back(t, table.number_at(r, fid));
  }
  write_svg(svg_path, {s_conc, s_eof, s_fid}, "Jt/hbar", "value", "");
}

void plot_sweep(const CsvTable& table, const std::string& svg_path) {
  const int jm = require_column(table, "jm", "sweep");
  const int tau_star = require_column(table, "tau_star", "sweep");
  const int objective = require_column(table, "objective", "sweep");

  Series curve{"objective", "#1f77b4", {}, false};
  double best_v = -1, best_jm = 0, best_tau = 0;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const double x = table.number_at(r, jm);
    const double v = table.number_at(r, objective);
    curve.points.emplace_back(x, v);
    if (v > best_v) {
      best_v = v;
      best_jm = x;
      best_tau = table.number_at(r, tau_star);
    }
  }
  std::ostringstream note;
  note << "peak: J_m = " << best_jm << ", Jt/hbar = " << best_tau
       << ", value = " << best_v;
  write_svg(svg_path, {curve}, "J_m", "objective", note.str());
}

void plot_disorder(const CsvTable& table, const std::string& svg_path) {
  const int p = require_column(table, "p", "disorder_scatter");
  const int eof_col = require_column(table, "eof", "disorder_scatter");

  Series scatter{"realizations", "#9467bd", {}, true};
  std::map<double, std::vector<double>> by_p;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const double x = table.number_at(r, p);
    const double v = table.number_at(r, eof_col);
    scatter.points.emplace_back(x, v);
    by_p[x].push_back(v);
  }

  Series mean{"mean", "#d62728", {}, false};
  Series lo{"min", "#7f7f7f", {}, false};
  Series hi{"max", "#2ca02c", {}, false};
  for (const auto& [x, values] : by_p) {
    double sum = 0;
    for (double v : values) sum += v;
    mean.points.emplace_back(x, sum / values.size());
    lo.points.emplace_back(x, *std::min_element(values.begin(), values.end()));
    hi.points.emplace_back(x, *std::max_element(values.begin(), values.end()));
  }
  write_svg(svg_path, {scatter, mean, lo, hi}, "p", "EoF", "");
}

}  // namespace

void emit_plot(const std::string& csv_path, PlotKind kind,
               const std::string& svg_path) {
  const CsvTable table = read_csv(csv_path);
  switch (kind) {
    case PlotKind::trace: plot_trace(table, svg_path); return;
    case PlotKind::sweep: plot_sweep(table, svg_path); return;
    case PlotKind::disorder_scatter: plot_disorder(table, svg_path); return;
  }
}

}  // namespace xxchain
