#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "qwsearch/errors.hpp"
#include "qwsearch/series.hpp"

namespace cli = qws::cli;

TEST_CASE("number formatting anchors") {
  CHECK(cli::format_number(0.5) == "0.5");
  CHECK(cli::format_number(1.0) == "1");
  CHECK(cli::format_number(0.0) == "0");
  CHECK(cli::format_number(-0.0) == "0");
  CHECK(cli::format_number(2.7320508075688772) == "2.73205080757");
  CHECK(cli::format_number(0.3125) == "0.3125");
  CHECK(cli::format_number(-0.35355339059327373) == "-0.353553390593");
  CHECK(cli::format_number(1e-30) == "1e-30");
  CHECK(cli::format_number(0.5, 3) == "0.5");
}

TEST_CASE("formatting is stable under reparse") {
  std::mt19937_64 rng(20240812);
  std::uniform_real_distribution<double> mag(-12.0, 12.0);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const double v = mant(rng) * std::pow(10.0, mag(rng));
    const std::string once = cli::format_number(v);
    const std::string twice = cli::format_number(std::stod(once));
    CHECK(once == twice);
  }
}

TEST_CASE("csv round trip is byte identical") {
  cli::Table table;
  table.header = {"t", "backend", "P"};
  table.rows = {{"0", "closed", "0.125"}, {"2", "closed", "0.5"}};
  const std::string text = cli::emit_csv(table);
  CHECK(text == "t,backend,P\n0,closed,0.125\n2,closed,0.5\n");
  const cli::Table back = cli::parse_csv(text);
  CHECK(back.header == table.header);
  CHECK(back.rows == table.rows);
  CHECK(cli::emit_csv(back) == text);
}

TEST_CASE("csv format errors") {
  CHECK_THROWS_AS(cli::parse_csv(""), qws::CsvFormatError);
  CHECK_THROWS_AS(cli::parse_csv("a,b\n1\n"), qws::CsvFormatError);
  CHECK_THROWS_AS(cli::parse_csv("a,b\n1,2,3\n"), qws::CsvFormatError);
}

TEST_CASE("fixed series column order") {
  const std::vector<std::string> expected = {
      "t",      "backend",  "P",  "C_l1",    "C_norm",
      "sC_closed", "sC_brute", "MC", "Q_noisy", "C_l1_noisy"};
  CHECK(cli::kSeriesColumns == expected);
}

TEST_CASE("series table rendering") {
  cli::Series series;
  series.extra_headers = {"agreement"};
  cli::SeriesRow row;
  row.t = 2;
  row.backend = "closed";
  row.P = 0.5;
  row.C_l1 = 1.7990381056766580;
  row.extra = {std::optional<double>(1.0)};
  series.rows.push_back(row);
  cli::SeriesRow bare;
  bare.t = 3;
  bare.backend = "full";
  bare.extra = {std::nullopt};
  series.rows.push_back(bare);

  const cli::Table table = series_to_table(series);
  REQUIRE(table.header.size() == 11);
  CHECK(table.header[10] == "agreement");
  REQUIRE(table.rows.size() == 2);
  CHECK(table.rows[0][0] == "2");
  CHECK(table.rows[0][1] == "closed");
  CHECK(table.rows[0][2] == "0.5");
  CHECK(table.rows[0][3] == "1.79903810568");
  CHECK(table.rows[0][4] == "");
  CHECK(table.rows[0][10] == "1");
  CHECK(table.rows[1][2] == "");
  CHECK(table.rows[1][10] == "");

  const std::string text = cli::emit_csv(table);
  CHECK(cli::emit_csv(cli::parse_csv(text)) == text);
}
