#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace xxchain {

// Key-value run configuration with [section] headers, '#' or ';' comments.
// All physical quantities are dimensionless (couplings in units of J, times
// in units of J t / hbar). Lookups that fail name the offending field and,
// when applicable, the line it was defined on.
class Config {
 public:
  static Config parse_file(const std::string& path);
  static Config parse_string(const std::string& text, const std::string& name);

  bool has(const std::string& section, const std::string& key) const;

  std::string require_string(const std::string& section,
                             const std::string& key) const;
  double require_number(const std::string& section, const std::string& key) const;
  std::int64_t require_integer(const std::string& section,
                               const std::string& key) const;

  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const;
  double get_number(const std::string& section, const std::string& key,
                    double fallback) const;
  std::int64_t get_integer(const std::string& section, const std::string& key,
                           std::int64_t fallback) const;

  // Comma-separated list of numbers.
  std::vector<double> require_number_list(const std::string& section,
                                          const std::string& key) const;

  // Flat "section.key" -> value view, sorted; used for the manifest echo.
  std::map<std::string, std::string> flattened() const;

  const std::string& name() const { return name_; }

 private:
  struct Entry {
    std::string value;
    int line = 0;
  };

  const Entry* find(const std::string& section, const std::string& key) const;
  const Entry& require(const std::string& section, const std::string& key) const;
  [[noreturn]] void fail_value(const std::string& section,
                               const std::string& key, const Entry& entry,
                               const std::string& expected) const;

  std::string name_;
  std::map<std::string, std::map<std::string, Entry>> sections_;
};

}  // namespace xxchain
