#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qwsearch/errors.hpp"

namespace qws::cli {

// Locale-independent rendering with 12 significant digits; the same number
// always produces the same bytes, and 12 digits parse back to a double that
// renders identically.
std::string format_number(double v);
std::string format_number(double v, int significant_digits);

// Minimal CSV table: one header row, string cells, '\n' line endings,
// '.' decimal separator in all numbers. Parsing then re-emitting any file
// produced here is byte-identical.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Throws CsvFormatError on an empty header, a missing header, or rows whose
// cell count differs from the header.
Table parse_csv(const std::string& text);
std::string emit_csv(const Table& table);

// The fixed column order shared by every series file; absent measures are
// emitted as empty cells. Extra columns (per-alpha noisy groups, the
// closed-vs-full agreement) append after the fixed ten.
extern const std::vector<std::string> kSeriesColumns;

struct SeriesRow {
  long t = 0;
  std::string backend;
  std::optional<double> P;
  std::optional<double> C_l1;
  std::optional<double> C_norm;
  std::optional<double> sC_closed;
  std::optional<double> sC_brute;
  std::optional<double> MC;
  std::optional<double> Q_noisy;
  std::optional<double> C_l1_noisy;
  std::vector<std::optional<double>> extra;
};

struct Series {
  std::vector<std::string> extra_headers;
  std::vector<SeriesRow> rows;
};

Table series_to_table(const Series& series);

}  // namespace qws::cli
