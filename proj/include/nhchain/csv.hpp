#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace nhchain::cli {

using CsvCell = std::variant<long long, double, std::string>;

/// 17 significant digits; "nan" / "inf" / "-inf" for non-finite values.
/// Parsing the result with from_chars restores the value bit for bit.
std::string format_double(double x);

/// Comma-separated table with '#' comment lines above the header.
class CsvTable {
 public:
  std::vector<std::string> comments;  ///< stored without the leading "# "
  std::vector<std::string> header;
  std::vector<std::vector<CsvCell>> rows;

  CsvTable() = default;
  explicit CsvTable(std::vector<std::string> columns) : header(std::move(columns)) {}

  /// Throws std::invalid_argument if the row width differs from the header.
  void add_row(std::vector<CsvCell> row);

  std::size_t column_index(const std::string& name) const;
  std::vector<double> column_as_double(const std::string& name) const;
  std::vector<std::string> column_as_string(const std::string& name) const;

  void write(std::ostream& os) const;
  std::string str() const;

  static CsvTable parse(std::istream& is);
  static CsvTable parse(const std::string& text);
};

}  // namespace nhchain::cli
