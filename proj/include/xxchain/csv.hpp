#pragma once

#include <string>
#include <vector>

namespace xxchain {

// Formats a double with 12 significant digits; the fixed format keeps
// repeated runs byte-identical.
std::string format_number(double value);

// Minimal CSV writer: header row plus string cells, written atomically at
// save() time.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  void add_row(std::vector<std::string> cells);
  const std::vector<std::string>& header() const { return header_; }
  std::string to_string() const;
  void save(const std::string& path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// Parsed CSV with a header row.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const;  // -1 when absent
  double number_at(std::size_t row, int col) const;
};

CsvTable read_csv(const std::string& path);

}  // namespace xxchain
