#include "qwsearch/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <optional>

namespace qws::cli {

namespace {

constexpr double kWidth = 880;
constexpr double kHeight = 560;
constexpr double kLeft = 72;
constexpr double kRight = 24;
constexpr double kTop = 32;
constexpr double kBottom = 56;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                          "#9467bd", "#ff7f0e", "#8c564b",
                          "#17becf", "#7f7f7f"};

std::optional<double> parse_cell(const std::string& cell) {
  if (cell.empty()) {
    return std::nullopt;
  }
  double v = 0.0;
  const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
    throw CsvFormatError("cell is not a number: '" + cell + "'");
  }
  return v;
}

std::string coord(double v) { return format_number(v, 8); }

// Round tick spacing to a 1/2/2.5/5 ladder so axis labels stay short.
double nice_step(double span, int target_ticks) {
  const double raw = span / std::max(target_ticks - 1, 1);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double norm = raw / mag;
  double step;
  if (norm <= 1.0) {
    step = 1.0;
  } else if (norm <= 2.0) {
    step = 2.0;
  } else if (norm <= 2.5) {
    step = 2.5;
  } else if (norm <= 5.0) {
    step = 5.0;
  } else {
    step = 10.0;
  }
  return step * mag;
}

struct AxisRange {
  double lo = 0.0;
  double hi = 1.0;
  double step = 0.2;
};

AxisRange axis_range(double lo, double hi) {
  if (!(hi > lo)) {
    const double pad = (lo == 0.0) ? 1.0 : std::abs(lo) * 0.5;
    lo -= pad;
    hi += pad;
  }
  AxisRange r;
  r.step = nice_step(hi - lo, 6);
  r.lo = std::floor(lo / r.step) * r.step;
  r.hi = std::ceil(hi / r.step) * r.step;
  return r;
}

void append_escaped(std::string& out, const std::string& text) {
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
}

}  // namespace

std::string render_line_chart(const Table& table, const PlotSpec& spec) {
  const auto column_index = [&table](const std::string& name) {
    const auto it = std::find(table.header.begin(), table.header.end(), name);
    if (it == table.header.end()) {
      throw OutOfRange("unknown column '" + name + "'");
    }
    return static_cast<std::size_t>(it - table.header.begin());
  };

  const std::size_t xi = column_index(spec.x_column);
  std::vector<std::string> columns = spec.columns;
  if (columns.empty()) {
    for (const auto& name : table.header) {
      if (name == spec.x_column || name == "backend") {
        continue;
      }
      // keep only columns with at least one numeric cell
      const std::size_t ci = column_index(name);
      const bool numeric = std::any_of(
          table.rows.begin(), table.rows.end(),
          [ci](const auto& row) { return !row[ci].empty(); });
      if (numeric) {
        columns.push_back(name);
      }
    }
  }
  if (columns.empty()) {
    throw CsvFormatError("no columns to plot");
  }

  struct Point {
    double x, y;
  };
  std::vector<std::vector<Point>> series(columns.size());
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& row : table.rows) {
    const auto x = parse_cell(row[xi]);
    if (!x) {
      continue;
    }
    for (std::size_t s = 0; s < columns.size(); ++s) {
      const auto y = parse_cell(row[column_index(columns[s])]);
      if (!y) {
        continue;
      }
      series[s].push_back({*x, *y});
      xmin = std::min(xmin, *x);
      xmax = std::max(xmax, *x);
      ymin = std::min(ymin, *y);
      ymax = std::max(ymax, *y);
    }
  }
  if (std::none_of(series.begin(), series.end(),
                   [](const auto& s) { return !s.empty(); })) {
    throw CsvFormatError("no plottable points");
  }

  const AxisRange xr = axis_range(xmin, xmax);
  const AxisRange yr = axis_range(ymin, ymax);
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  const auto px = [&](double x) {
    return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw;
  };
  const auto py = [&](double y) {
    return kTop + ph - (y - yr.lo) / (yr.hi - yr.lo) * ph;
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         coord(kWidth) + "\" height=\"" + coord(kHeight) + "\" viewBox=\"0 0 " +
         coord(kWidth) + " " + coord(kHeight) + "\">\n";
  svg += "<rect width=\"" + coord(kWidth) + "\" height=\"" + coord(kHeight) +
         "\" fill=\"white\"/>\n";

  // axes
  svg += "<g stroke=\"#333333\" stroke-width=\"1\" fill=\"none\">\n";
  svg += "<path d=\"M " + coord(kLeft) + " " + coord(kTop) + " V " +
         coord(kTop + ph) + " H " + coord(kLeft + pw) + "\"/>\n";
  svg += "</g>\n";

  // ticks and labels
  svg += "<g font-family=\"sans-serif\" font-size=\"13\" fill=\"#333333\">\n";
  for (double x = xr.lo; x <= xr.hi + xr.step * 1e-9; x += xr.step) {
    const double cx = px(x);
    svg += "<line x1=\"" + coord(cx) + "\" y1=\"" + coord(kTop + ph) +
           "\" x2=\"" + coord(cx) + "\" y2=\"" + coord(kTop + ph + 5) +
           "\" stroke=\"#333333\"/>\n";
    svg += "<text x=\"" + coord(cx) + "\" y=\"" + coord(kTop + ph + 20) +
           "\" text-anchor=\"middle\">" + format_number(x, 6) + "</text>\n";
  }
  for (double y = yr.lo; y <= yr.hi + yr.step * 1e-9; y += yr.step) {
    const double cy = py(y);
    svg += "<line x1=\"" + coord(kLeft - 5) + "\" y1=\"" + coord(cy) +
           "\" x2=\"" + coord(kLeft) + "\" y2=\"" + coord(cy) +
           "\" stroke=\"#333333\"/>\n";
    svg += "<text x=\"" + coord(kLeft - 9) + "\" y=\"" + coord(cy + 4) +
           "\" text-anchor=\"end\">" + format_number(y, 6) + "</text>\n";
  }
  std::string xlabel;
  append_escaped(xlabel, spec.x_column);
  svg += "<text x=\"" + coord(kLeft + pw / 2) + "\" y=\"" +
         coord(kHeight - 12) + "\" text-anchor=\"middle\">" + xlabel +
         "</text>\n";
  svg += "</g>\n";

  // series
  for (std::size_t s = 0; s < series.size(); ++s) {
    if (series[s].empty()) {
      continue;
    }
    const char* color = kPalette[s % (sizeof(kPalette) / sizeof(*kPalette))];
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < series[s].size(); ++i) {
      if (i > 0) {
        svg += ' ';
      }
      svg += coord(px(series[s][i].x)) + "," + coord(py(series[s][i].y));
    }
    svg += "\"/>\n";
  }

  // legend
  svg += "<g font-family=\"sans-serif\" font-size=\"13\">\n";
  for (std::size_t s = 0; s < columns.size(); ++s) {
    const double ly = kTop + 8 + 18 * static_cast<double>(s);
    const char* color = kPalette[s % (sizeof(kPalette) / sizeof(*kPalette))];
    svg += "<line x1=\"" + coord(kLeft + pw - 150) + "\" y1=\"" + coord(ly) +
           "\" x2=\"" + coord(kLeft + pw - 122) + "\" y2=\"" + coord(ly) +
           "\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"2\"/>\n";
    std::string label;
    append_escaped(label, columns[s]);
    svg += "<text x=\"" + coord(kLeft + pw - 116) + "\" y=\"" + coord(ly + 4) +
           "\" fill=\"#333333\">" + label + "</text>\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace qws::cli
