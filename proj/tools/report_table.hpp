#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phik/bigint.hpp"

namespace phik::cli {

enum class OutputFormat { plain, json, csv };

OutputFormat parse_format(std::string_view name);

// One value in a report. Exact integers and rationals travel as decimal
// strings in JSON; reals are rendered with 15 significant digits so the CSV
// text and the JSON number denote the same double.
struct Cell {
  enum class Kind { text, exact, real, boolean, integer };
  Kind kind = Kind::text;
  std::string text;
  double real = 0;
  bool flag = false;

  static Cell of_text(std::string s);
  static Cell of_exact(const BigInt& v);
  static Cell of_exact(const Rational& v);
  static Cell of_real(long double v);
  static Cell of_bool(bool b);
  static Cell of_integer(unsigned long long v);
};

struct Table {
  std::string kind;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// meta, when present, becomes a leading "# ..." line (plain, csv) or a
// "meta" object (json).
std::string render(const Table& table, OutputFormat format,
                   const std::optional<std::string>& meta = std::nullopt);

std::string format_real(long double v);

}  // namespace phik::cli
