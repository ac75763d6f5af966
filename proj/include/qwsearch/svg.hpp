#pragma once

#include <string>
#include <vector>

#include "qwsearch/series.hpp"

namespace qws::cli {

// Column selection for a line chart; empty columns means every numeric
// column except the x column and "backend".
struct PlotSpec {
  std::string x_column = "t";
  std::vector<std::string> columns;
};

// Self-contained SVG 1.1 line chart, one polyline per selected column,
// axis labels from the CSV header. Deterministic: identical input bytes
// yield identical output bytes. Throws CsvFormatError when the table has
// no plottable points and OutOfRange for unknown column names.
std::string render_line_chart(const Table& table, const PlotSpec& spec);

}  // namespace qws::cli
