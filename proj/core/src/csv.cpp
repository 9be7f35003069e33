#include "photonbec/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "photonbec/errors.hpp"

namespace photonbec::csv {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

Writer::Writer(std::ostream& os, const std::vector<std::string>& header)
    : os_(os), columns_(header.size()) {
  if (header.empty()) throw std::invalid_argument("csv::Writer: header must not be empty");
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) os_ << ',';
    os_ << header[i];
  }
  os_ << '\n';
}

void Writer::write_row(std::span<const double> values) {
  if (values.size() != columns_)
    throw std::invalid_argument("csv::Writer: row width does not match header");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os_ << ',';
    os_ << format_double(values[i]);
  }
  os_ << '\n';
}

int Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return static_cast<int>(i);
  return -1;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

Table read_numeric(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path.string() + "'", 0);

  Table table;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_fields(line);
    if (table.header.empty()) {
      table.header = std::move(fields);
      continue;
    }
    if (fields.size() != table.header.size())
      throw FormatError(path.string() + ": expected " + std::to_string(table.header.size()) +
                            " fields, got " + std::to_string(fields.size()),
                        line_no);
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(f, &used);
      } catch (const std::exception&) {
        throw FormatError(path.string() + ": unparsable number '" + f + "'", line_no);
      }
      if (used != f.size())
        throw FormatError(path.string() + ": trailing junk in '" + f + "'", line_no);
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  if (table.header.empty()) throw FormatError(path.string() + ": empty file", line_no);
  return table;
}

}  // namespace photonbec::csv
