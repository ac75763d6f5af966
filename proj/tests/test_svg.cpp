#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "qwsearch/errors.hpp"
#include "qwsearch/series.hpp"
#include "qwsearch/svg.hpp"

namespace cli = qws::cli;

namespace {

cli::Table sample_table() {
  cli::Table table;
  table.header = {"t", "backend", "P", "C_l1"};
  table.rows = {{"0", "closed", "0.125", "2.73205080757"},
                {"2", "closed", "0.5", "1.79903810568"},
                {"4", "closed", "0.125", "1.79903810568"},
                {"6", "closed", "0.125", "2.73205080757"}};
  return table;
}

}  // namespace

TEST_CASE("line chart renders deterministically") {
  const cli::Table table = sample_table();
  const std::string a = cli::render_line_chart(table, {});
  const std::string b = cli::render_line_chart(table, {});
  CHECK(a == b);
  CHECK(a.rfind("<svg xmlns", 0) == 0);
  const std::string tail = "</svg>\n";
  REQUIRE(a.size() >= tail.size());
  CHECK(a.compare(a.size() - tail.size(), tail.size(), tail) == 0);
  CHECK(a.find("P") != std::string::npos);
  CHECK(a.find("C_l1") != std::string::npos);
  CHECK(a.find("polyline") != std::string::npos);
  CHECK(a.find("NaN") == std::string::npos);
  CHECK(a.find("backend") == std::string::npos);
}

TEST_CASE("explicit column selection") {
  cli::PlotSpec spec;
  spec.columns = {"P"};
  const std::string svg = cli::render_line_chart(sample_table(), spec);
  CHECK(svg.find("0.5") != std::string::npos);
  CHECK(svg.find("C_l1") == std::string::npos);

  cli::PlotSpec unknown;
  unknown.columns = {"missing"};
  CHECK_THROWS_AS(cli::render_line_chart(sample_table(), unknown),
                  qws::OutOfRange);

  cli::PlotSpec bad_x;
  bad_x.x_column = "nope";
  CHECK_THROWS_AS(cli::render_line_chart(sample_table(), bad_x),
                  qws::OutOfRange);
}

TEST_CASE("column names are xml escaped") {
  cli::Table table;
  table.header = {"t", "a<b&c"};
  table.rows = {{"0", "1"}, {"1", "2"}};
  const std::string svg = cli::render_line_chart(table, {});
  CHECK(svg.find("a&lt;b&amp;c") != std::string::npos);
  CHECK(svg.find("a<b&c") == std::string::npos);
}

TEST_CASE("degenerate tables are rejected") {
  cli::Table header_only;
  header_only.header = {"t", "P"};
  CHECK_THROWS_AS(cli::render_line_chart(header_only, {}),
                  qws::CsvFormatError);

  cli::Table no_numeric;
  no_numeric.header = {"t", "backend"};
  no_numeric.rows = {{"0", "closed"}};
  CHECK_THROWS_AS(cli::render_line_chart(no_numeric, {}),
                  qws::CsvFormatError);

  cli::Table bad_cell;
  bad_cell.header = {"t", "P"};
  bad_cell.rows = {{"0", "oops"}};
  CHECK_THROWS_AS(cli::render_line_chart(bad_cell, {}), qws::CsvFormatError);
}

TEST_CASE("empty cells are skipped, not plotted") {
  cli::Table table;
  table.header = {"t", "P", "MC"};
  table.rows = {{"1", "0.25", ""}, {"3", "0.5", "1.5"}, {"5", "", "1.2"}};
  const std::string svg = cli::render_line_chart(table, {});
  CHECK(svg.find("MC") != std::string::npos);
  CHECK(svg.find("NaN") == std::string::npos);
}
