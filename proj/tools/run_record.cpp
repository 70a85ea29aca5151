#include "run_record.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace hallpost::cli {

namespace {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

nlohmann::ordered_json to_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, double>) {
          // Round-trip through the 15-digit text form so JSON and CSV agree.
          if (!std::isfinite(v)) return format_double(v);
          return std::stod(format_double(v));
        } else {
          return v;
        }
      },
      cell);
}

std::string join_pairs(const std::vector<std::pair<std::string, Cell>>& pairs) {
  std::string line;
  for (const auto& [key, value] : pairs) {
    if (!line.empty()) line += ' ';
    line += key + '=' + format_cell(value);
  }
  return line;
}

}  // namespace

std::string format_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return v;
        }
      },
      cell);
}

void RunRecord::write_csv(std::ostream& out) const {
  out << "# command: " << command << '\n';
  out << "# version: hallpost " << tool_version << '\n';
  if (timestamp) out << "# timestamp: " << *timestamp << '\n';
  out << "# parameters: " << join_pairs(parameters) << '\n';
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string text = format_cell(row[i]);
      // Error messages may contain commas.
      const bool quote = text.find_first_of(",\"") != std::string::npos;
      out << (i ? "," : "");
      if (quote) {
        out << '"';
        for (char ch : text) out << (ch == '"' ? std::string("\"\"") : std::string(1, ch));
        out << '"';
      } else {
        out << text;
      }
    }
    out << '\n';
  }
  if (!summary.empty()) out << "# summary: " << join_pairs(summary) << '\n';
}

void RunRecord::write_json(std::ostream& out) const {
  nlohmann::ordered_json doc;
  doc["command"] = command;
  doc["tool_version"] = tool_version;
  if (timestamp) doc["timestamp"] = *timestamp;
  doc["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : parameters) doc["parameters"][key] = to_json(value);
  doc["columns"] = columns;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < columns.size(); ++i) {
      obj[columns[i]] = to_json(row[i]);
    }
    doc["rows"].push_back(std::move(obj));
  }
  if (!summary.empty()) {
    doc["summary"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : summary) doc["summary"][key] = to_json(value);
  }
  out << doc.dump(2) << '\n';
}

}  // namespace hallpost::cli
