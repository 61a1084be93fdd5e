#pragma once

#include <string>
#include <vector>

namespace efp::cli {

// A flat report: optional scalar fields plus a table of rows keyed by the
// parameter tuple. Rendered as versioned JSON (objects keyed by tuple) or
// CSV (header row, comma separator). Output is deterministic: insertion
// order is preserved everywhere.
struct Report {
  std::string command;
  long precision_bits = 0;
  std::vector<std::pair<std::string, std::string>> scalars;
  std::vector<std::string> columns;
  std::vector<std::pair<std::string, std::vector<std::string>>> rows;

  void scalar(const std::string& key, const std::string& value) {
    scalars.emplace_back(key, value);
  }
  void row(const std::string& key, std::vector<std::string> cells) {
    rows.emplace_back(key, std::move(cells));
  }

  std::string to_json() const;
  std::string to_csv() const;

  // Writes to the path, or stdout when path is empty. format: "json"|"csv".
  void emit(const std::string& format, const std::string& path) const;
};

}  // namespace efp::cli
