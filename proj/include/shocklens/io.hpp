#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "shocklens/errors.hpp"

namespace shocklens {

/// Floats serialized with 17 significant digits round-trip exactly.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// Minimal RFC 4180 writer: CRLF records, quoting only when needed (the
/// fields written here are numbers and bare identifiers).
class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path) : out_(path, std::ios::binary) {
    if (!out_) throw InvalidInput("cannot open '" + path + "' for writing");
  }
  void row(const std::vector<std::string>& fields) {
    for (size_t i = 0; i < fields.size(); ++i) {
      if (i) out_ << ',';
      out_ << escape(fields[i]);
    }
    out_ << "\r\n";
  }

 private:
  static std::string escape(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  }
  std::ofstream out_;
};

}  // namespace shocklens
