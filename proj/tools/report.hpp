#pragma once

// Deterministic JSON report writer for the CLI: insertion-ordered keys,
// numbers formatted with 10 significant digits and a '.' decimal separator
// regardless of locale, so identical invocations produce identical bytes.

#include <cstdio>
#include <string>
#include <vector>

namespace cli {

inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

class Report {
 public:
  Report() { out_ = "{"; }

  Report& field(const std::string& key, double value) {
    append_key(key);
    out_ += format_number(value);
    return *this;
  }
  Report& field(const std::string& key, int value) {
    append_key(key);
    out_ += std::to_string(value);
    return *this;
  }
  Report& field(const std::string& key, bool value) {
    append_key(key);
    out_ += value ? "true" : "false";
    return *this;
  }
  Report& field(const std::string& key, const std::string& value) {
    append_key(key);
    out_ += '"' + value + '"';
    return *this;
  }
  Report& field(const std::string& key, const char* value) {
    return field(key, std::string(value));
  }
  Report& field(const std::string& key, const std::vector<double>& values) {
    append_key(key);
    out_ += "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) out_ += ",";
      out_ += format_number(values[i]);
    }
    out_ += "]";
    return *this;
  }
  Report& object(const std::string& key, const Report& nested) {
    append_key(key);
    out_ += nested.str();
    return *this;
  }

  std::string str() const { return out_ + "}"; }

 private:
  void append_key(const std::string& key) {
    if (out_.size() > 1) out_ += ",";
    out_ += '"' + key + "\":";
  }
  std::string out_;
};

}  // namespace cli
