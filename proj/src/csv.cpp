#include "heatpen/csv.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace heatpen {

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {
  if (header_.empty()) throw std::invalid_argument("CsvTable: empty header");
}

void CsvTable::add_row(const std::vector<double>& row) {
  if (row.size() != header_.size())
    throw std::invalid_argument("CsvTable: row width " + std::to_string(row.size()) +
                                " does not match header width " +
                                std::to_string(header_.size()));
  rows_.push_back(row);
}

std::string format_number(double v) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 15);
  if (res.ec != std::errc()) throw std::runtime_error("format_number failed");
  return std::string(buf, res.ptr);
}

std::string CsvTable::to_string() const {
  std::string out;
  for (std::size_t c = 0; c < header_.size(); ++c) {
    if (c) out += ',';
    out += header_[c];
  }
  out += '\n';
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_number(row[c]);
    }
    out += '\n';
  }
  return out;
}

void CsvTable::write(const std::filesystem::path& path) const {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  f << to_string();
  if (!f) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace heatpen
