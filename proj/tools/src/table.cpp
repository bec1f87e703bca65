#include "polarikit_cli/table.hpp"

#include <cstdio>
#include <stdexcept>

namespace polarikit::cli {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void Table::add_row(std::initializer_list<nlohmann::json> cells) {
  if (cells.size() != columns.size()) {
    throw std::logic_error("table row width mismatch");
  }
  rows.emplace_back(cells);
}

namespace {

std::string csv_field(const nlohmann::json& cell) {
  std::string text;
  if (cell.is_number_float()) {
    text = format_double(cell.get<double>());
  } else if (cell.is_number_integer()) {
    text = std::to_string(cell.get<long long>());
  } else if (cell.is_string()) {
    text = cell.get<std::string>();
  } else {
    text = cell.dump();
  }
  if (text.find_first_of(",\"\n\r") == std::string::npos) {
    return text;
  }
  std::string quoted = "\"";
  for (char c : text) {
    quoted += c;
    if (c == '"') quoted += '"';
  }
  quoted += '"';
  return quoted;
}

}  // namespace

std::string Table::to_csv() const {
  std::string out;
  out.reserve(32 * (rows.size() + 1));
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += csv_field(columns[i]);
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_field(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string Table::to_json_text() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      obj[columns[i]] = row[i];
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump() + "\n";
}

}  // namespace polarikit::cli
