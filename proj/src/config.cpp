#include "xxchain/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace xxchain {

namespace {

std::string trim(const std::string& s) {
  std::size_t lo = 0, hi = s.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(s[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(s[hi - 1]))) --hi;
  return s.substr(lo, hi - lo);
}

}  // namespace

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open config file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_string(buffer.str(), path);
}

Config Config::parse_string(const std::string& text, const std::string& name) {
  Config config;
  config.name_ = name;

  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t comment = line.find_first_of("#;");
    if (comment != std::string::npos) line.erase(comment);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        throw std::invalid_argument(name + ":" + std::to_string(line_no) +
                                    ": malformed section header '" + line + "'");
      }
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(name + ":" + std::to_string(line_no) +
                                  ": expected 'key = value', got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw std::invalid_argument(name + ":" + std::to_string(line_no) +
                                  ": empty key");
    }
    config.sections_[section][key] = Entry{value, line_no};
  }
  return config;
}

bool Config::has(const std::string& section, const std::string& key) const {
  return find(section, key) != nullptr;
}

const Config::Entry* Config::find(const std::string& section,
                                  const std::string& key) const {
  const auto sec = sections_.find(section);
  if (sec == sections_.end()) return nullptr;
  const auto entry = sec->second.find(key);
  return entry == sec->second.end() ? nullptr : &entry->second;
}

const Config::Entry& Config::require(const std::string& section,
                                     const std::string& key) const {
  const Entry* entry = find(section, key);
  if (!entry) {
    throw std::invalid_argument("missing required field '" + key +
                                "' in section [" + section + "] of " + name_);
  }
  return *entry;
}

void Config::fail_value(const std::string& section, const std::string& key,
                        const Entry& entry, const std::string& expected) const {
  throw std::invalid_argument(name_ + ":" + std::to_string(entry.line) +
                              ": invalid value '" + entry.value +
                              "' for field '" + key + "' in section [" +
                              section + "] (expected " + expected + ")");
}

std::string Config::require_string(const std::string& section,
                                   const std::string& key) const {
  return require(section, key).value;
}

double Config::require_number(const std::string& section,
                              const std::string& key) const {
  const Entry& entry = require(section, key);
  double v = 0.0;
  std::size_t used = 0;
  bool ok = true;
  try {
    v = std::stod(entry.value, &used);
  } catch (const std::logic_error&) {
    ok = false;
  }
  if (!ok || used != entry.value.size()) {
    fail_value(section, key, entry, "a number");
  }
  return v;
}

std::int64_t Config::require_integer(const std::string& section,
                                     const std::string& key) const {
  const Entry& entry = require(section, key);
  std::int64_t v = 0;
  const char* first = entry.value.data();
  const char* last = first + entry.value.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    fail_value(section, key, entry, "an integer");
  }
  return v;
}

std::string Config::get_string(const std::string& section,
                               const std::string& key,
                               const std::string& fallback) const {
  const Entry* entry = find(section, key);
  return entry ? entry->value : fallback;
}

double Config::get_number(const std::string& section, const std::string& key,
                          double fallback) const {
  return has(section, key) ? require_number(section, key) : fallback;
}

std::int64_t Config::get_integer(const std::string& section,
                                 const std::string& key,
                                 std::int64_t fallback) const {
  return has(section, key) ? require_integer(section, key) : fallback;
}

std::vector<double> Config::require_number_list(const std::string& section,
                                                const std::string& key) const {
  const Entry& entry = require(section, key);
  std::vector<double> values;
  std::istringstream in(entry.value);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    double v = 0.0;
    std::size_t used = 0;
    bool ok = !item.empty();
    if (ok) {
      try {
        v = std::stod(item, &used);
      } catch (const std::logic_error&) {
        ok = false;
      }
    }
    if (!ok || used != item.size()) {
      fail_value(section, key, entry, "comma-separated numbers");
    }
    values.push_back(v);
  }
  if (values.empty()) fail_value(section, key, entry, "comma-separated numbers");
  return values;
}

std::map<std::string, std::string> Config::flattened() const {
  std::map<std::string, std::string> flat;
  for (const auto& [section, entries] : sections_) {
    for (const auto& [key, entry] : entries) {
      flat[(section.empty() ? key : section + "." + key)] = entry.value;
    }
  }
  return flat;
}

}  // namespace xxchain
