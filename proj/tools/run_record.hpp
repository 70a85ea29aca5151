#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hallpost::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// One table cell. Empty cells print as nothing in CSV and null in JSON.
using Cell = std::variant<std::monostate, double, long long, bool, std::string>;

/// Numbers are printed with 15 significant digits.
std::string format_cell(const Cell& cell);

/// A command invocation together with everything needed to reproduce it.
struct RunRecord {
  std::string command;
  std::vector<std::pair<std::string, Cell>> parameters;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> summary;
  std::string tool_version = kToolVersion;
  std::optional<std::string> timestamp;

  void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }

  // CSV with '#'-prefixed metadata lines ahead of the header row.
  void write_csv(std::ostream& out) const;
  void write_json(std::ostream& out) const;
};

}  // namespace hallpost::cli
