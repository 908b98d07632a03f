#include "polyangle/report.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace polyangle {

std::string format_real(double value) {
  if (!std::isfinite(value)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

Record::Record(std::string_view type) { field("type", type); }

Record& Record::raw(std::string_view key, std::string json) {
  fields_.emplace_back(nlohmann::json(std::string(key)).dump(), std::move(json));
  return *this;
}

Record& Record::field(std::string_view key, double value) { return raw(key, format_real(value)); }

Record& Record::field(std::string_view key, std::int64_t value) {
  return raw(key, std::to_string(value));
}

Record& Record::field(std::string_view key, std::uint64_t value) {
  return raw(key, std::to_string(value));
}

Record& Record::field(std::string_view key, bool value) { return raw(key, value ? "true" : "false"); }

Record& Record::field(std::string_view key, std::string_view value) {
  return raw(key, nlohmann::json(std::string(value)).dump());
}

Record& Record::field(std::string_view key, const std::vector<double>& values) {
  std::string json = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) json += ",";
    json += format_real(values[i]);
  }
  json += "]";
  return raw(key, std::move(json));
}

Record& Record::field(std::string_view key, const std::vector<int>& values) {
  std::string json = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) json += ",";
    json += std::to_string(values[i]);
  }
  json += "]";
  return raw(key, std::move(json));
}

std::string Record::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    if (i) out += ",";
    out += fields_[i].first;
    out += ":";
    out += fields_[i].second;
  }
  out += "}";
  return out;
}

std::ostream& operator<<(std::ostream& out, const Record& record) { return out << record.str(); }

}  // namespace polyangle
