#include "qwsearch/series.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace qws::cli {

std::string format_number(double v, int significant_digits) {
  if (v == 0.0) {
    v = 0.0;  // normalize -0
  }
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general,
                                 significant_digits);
  return std::string(buf, res.ptr);
}

std::string format_number(double v) { return format_number(v, 12); }

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      cells.push_back(line.substr(start));
      break;
    }
    cells.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return cells;
}

}  // namespace

Table parse_csv(const std::string& text) {
  if (text.empty()) {
    throw CsvFormatError("empty input, expected a CSV header");
  }
  Table table;
  std::size_t pos = 0;
  bool first = true;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) {
      nl = text.size();
    }
    const std::string line = text.substr(pos, nl - pos);
    pos = nl + 1;
    if (first) {
      table.header = split_line(line);
      if (line.empty()) {
        throw CsvFormatError("empty CSV header");
      }
      first = false;
      continue;
    }
    if (line.empty() && pos >= text.size()) {
      break;  // trailing newline
    }
    auto cells = split_line(line);
    if (cells.size() != table.header.size()) {
      throw CsvFormatError("row with " + std::to_string(cells.size()) +
                           " cells under a header of " +
                           std::to_string(table.header.size()));
    }
    table.rows.push_back(std::move(cells));
  }
  return table;
}

std::string emit_csv(const Table& table) {
  std::string out;
  const auto join = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += cells[i];
    }
    out += '\n';
  };
  join(table.header);
  for (const auto& row : table.rows) {
    join(row);
  }
  return out;
}

const std::vector<std::string> kSeriesColumns = {
    "t",  "backend",  "P",  "C_l1",    "C_norm",
    "sC_closed", "sC_brute", "MC", "Q_noisy", "C_l1_noisy"};

Table series_to_table(const Series& series) {
  Table table;
  table.header = kSeriesColumns;
  table.header.insert(table.header.end(), series.extra_headers.begin(),
                      series.extra_headers.end());
  const auto cell = [](const std::optional<double>& v) {
    return v ? format_number(*v) : std::string();
  };
  for (const auto& row : series.rows) {
    std::vector<std::string> cells;
    cells.reserve(table.header.size());
    cells.push_back(std::to_string(row.t));
    cells.push_back(row.backend);
    cells.push_back(cell(row.P));
    cells.push_back(cell(row.C_l1));
    cells.push_back(cell(row.C_norm));
    cells.push_back(cell(row.sC_closed));
    cells.push_back(cell(row.sC_brute));
    cells.push_back(cell(row.MC));
    cells.push_back(cell(row.Q_noisy));
    cells.push_back(cell(row.C_l1_noisy));
    for (const auto& v : row.extra) {
      cells.push_back(cell(v));
    }
    while (cells.size() < table.header.size()) {
      cells.emplace_back();
    }
    table.rows.push_back(std::move(cells));
  }
  return table;
}

}  // namespace qws::cli
