#pragma once

// Minimal RFC 4180 writer: fields containing a comma, quote, CR or LF are
// quoted, embedded quotes doubled, records terminated by CRLF.

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace trigrid {

std::string csv_escape(std::string_view field);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}

  void row(const std::vector<std::string>& fields);
  void row(std::initializer_list<std::string_view> fields);

 private:
  std::ostream& os_;
};

}  // namespace trigrid
