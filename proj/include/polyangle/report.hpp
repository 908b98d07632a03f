#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polyangle {

/// Formats a double with 17 significant digits; non-finite values become null.
std::string format_real(double value);

/// One line-delimited JSON record. Fields keep insertion order so output is
/// byte-stable across runs.
class Record {
 public:
  explicit Record(std::string_view type);

  Record& field(std::string_view key, double value);
  Record& field(std::string_view key, std::int64_t value);
  Record& field(std::string_view key, std::uint64_t value);
  Record& field(std::string_view key, int value) { return field(key, static_cast<std::int64_t>(value)); }
  Record& field(std::string_view key, unsigned value) {
    return field(key, static_cast<std::uint64_t>(value));
  }
  Record& field(std::string_view key, bool value);
  Record& field(std::string_view key, std::string_view value);
  Record& field(std::string_view key, const char* value) { return field(key, std::string_view(value)); }
  Record& field(std::string_view key, const std::vector<double>& values);
  Record& field(std::string_view key, const std::vector<int>& values);

  std::string str() const;

 private:
  Record& raw(std::string_view key, std::string json);
  std::vector<std::pair<std::string, std::string>> fields_;
};

std::ostream& operator<<(std::ostream& out, const Record& record);

}  // namespace polyangle
