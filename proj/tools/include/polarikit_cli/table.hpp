#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "json.hpp"

namespace polarikit::cli {

// Column-named result grid. Cells are JSON scalars (floating point numbers,
// integers, or short strings) so one structure serves both output formats.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;

  explicit Table(std::vector<std::string> names) : columns(std::move(names)) {}

  // Throws std::logic_error if the width does not match the header.
  void add_row(std::initializer_list<nlohmann::json> cells);

  // Header row plus one line per row, LF line endings, '.' decimal point,
  // floating-point cells at 17 significant digits, fields quoted only when
  // they contain a delimiter, quote, or newline.
  std::string to_csv() const;

  // Array of one object per row keyed by column name, compact, trailing
  // newline. Number formatting is shortest-round-trip.
  std::string to_json_text() const;
};

// "%.17g" with the C locale decimal point.
std::string format_double(double value);

}  // namespace polarikit::cli
