#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace heatpen {

/// Rectangular numeric table written as CSV with 15 significant digits,
/// locale-independent and byte-deterministic for identical inputs.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(const std::vector<double>& row);
  std::size_t row_count() const { return rows_.size(); }
  std::string to_string() const;
  void write(const std::filesystem::path& path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<double>> rows_;
};

/// Shortest-but-precise decimal rendering used by CsvTable (>= 12 significant
/// digits per the file contract).
std::string format_number(double v);

}  // namespace heatpen
