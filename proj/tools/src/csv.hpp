#pragma once
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace cdlab::cli {

// RFC 4180 style: fields containing ',', '"', CR or LF are quoted, quotes doubled, CRLF-free "\n" rows.
std::string csv_quote(const std::string& field);
// 17 significant digits ('.' decimal, locale independent); non-finite values print as nan/inf/-inf.
std::string csv_number(double v);

using CsvCell = std::variant<double, long, std::string>;

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void header(const std::vector<std::string>& names);
  void row(const std::vector<CsvCell>& cells);
  void row(const std::vector<double>& values);

 private:
  std::ostream& out_;
};

// Parses one CSV document (used by tests and result loading).
std::vector<std::vector<std::string>> csv_parse(const std::string& text);

}  // namespace cdlab::cli
