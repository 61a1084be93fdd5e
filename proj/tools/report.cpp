#include "report.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

#include <json.hpp>

namespace efp::cli {

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "efp-report/1";
  j["command"] = command;
  if (precision_bits > 0) j["precision_bits"] = precision_bits;
  for (const auto& [k, v] : scalars) j[k] = v;
  if (!columns.empty()) {
    nlohmann::ordered_json table = nlohmann::ordered_json::object();
    for (const auto& [key, cells] : rows) {
      nlohmann::ordered_json row = nlohmann::ordered_json::object();
      for (size_t i = 0; i < columns.size() && i < cells.size(); ++i)
        row[columns[i]] = cells[i];
      table[key] = std::move(row);
    }
    j["rows"] = std::move(table);
  }
  return j.dump(2) + "\n";
}

namespace {
std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}
}  // namespace

std::string Report::to_csv() const {
  if (columns.empty()) {
    std::string out = "field,value\n";
    for (const auto& [k, v] : scalars) out += csv_escape(k) + "," + csv_escape(v) + "\n";
    return out;
  }
  std::string out = "key";
  for (const auto& c : columns) out += "," + csv_escape(c);
  out += "\n";
  for (const auto& [key, cells] : rows) {
    out += csv_escape(key);
    for (const auto& c : cells) out += "," + csv_escape(c);
    out += "\n";
  }
  return out;
}

void Report::emit(const std::string& format, const std::string& path) const {
  std::string text;
  if (format == "json")
    text = to_json();
  else if (format == "csv")
    text = to_csv();
  else
    throw std::invalid_argument("unknown format '" + format + "' (expected json or csv)");
  if (path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
    f << text;
  }
}

}  // namespace efp::cli
