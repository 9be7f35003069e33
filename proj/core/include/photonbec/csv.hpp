#pragma once

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace photonbec::csv {

/// Locale-independent, deterministic formatting: "%.12g" with '.' decimal.
std::string format_double(double v);

/// Streaming writer: header row on construction, one numeric row per call.
class Writer {
 public:
  Writer(std::ostream& os, const std::vector<std::string>& header);
  void write_row(std::span<const double> values);

 private:
  std::ostream& os_;
  std::size_t columns_;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  int column(const std::string& name) const;  // -1 when absent
};

/// Reads a numeric CSV with a header row. Throws FormatError with the
/// offending 1-based line number on ragged rows or unparsable fields.
Table read_numeric(const std::filesystem::path& path);

}  // namespace photonbec::csv
