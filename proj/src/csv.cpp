#include "nhchain/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nhchain::cli {

namespace {

std::string sanitize(const std::string& s) {
  std::string out = s;
  for (char& c : out)
    if (c == ',' || c == '\n' || c == '\r') c = (c == ',') ? ';' : ' ';
  return out;
}

CsvCell parse_cell(const std::string& text) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.find_first_of(".eEni") == std::string::npos) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec == std::errc() && ptr == last) return v;
  }
  double d = 0.0;
  auto [ptr, ec] = std::from_chars(first, last, d);
  if (ec == std::errc() && ptr == last) return d;
  return text;
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, ptr);
}

void CsvTable::add_row(std::vector<CsvCell> row) {
  if (row.size() != header.size())
    throw std::invalid_argument("CsvTable: row has " + std::to_string(row.size()) +
                                " cells, header has " + std::to_string(header.size()));
  rows.push_back(std::move(row));
}

std::size_t CsvTable::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw std::invalid_argument("CsvTable: no column named '" + name + "'");
}

std::vector<double> CsvTable::column_as_double(const std::string& name) const {
  const std::size_t c = column_index(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    const CsvCell& cell = row[c];
    if (const auto* i = std::get_if<long long>(&cell))
      out.push_back(static_cast<double>(*i));
    else if (const auto* d = std::get_if<double>(&cell))
      out.push_back(*d);
    else
      throw std::invalid_argument("CsvTable: column '" + name + "' holds text");
  }
  return out;
}

std::vector<std::string> CsvTable::column_as_string(const std::string& name) const {
  const std::size_t c = column_index(name);
  std::vector<std::string> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    const CsvCell& cell = row[c];
    if (const auto* i = std::get_if<long long>(&cell))
      out.push_back(std::to_string(*i));
    else if (const auto* d = std::get_if<double>(&cell))
      out.push_back(format_double(*d));
    else
      out.push_back(std::get<std::string>(cell));
  }
  return out;
}

void CsvTable::write(std::ostream& os) const {
  for (const std::string& c : comments) os << "# " << c << '\n';
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>)
              os << format_double(v);
            else if constexpr (std::is_same_v<T, long long>)
              os << v;
            else
              os << sanitize(v);
          },
          row[i]);
    }
    os << '\n';
  }
}

std::string CsvTable::str() const {
  std::ostringstream os;
  write(os);
  return os.str();
}

CsvTable CsvTable::parse(std::istream& is) {
  CsvTable t;
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::size_t start = (line.size() > 1 && line[1] == ' ') ? 2 : 1;
      t.comments.push_back(line.substr(start));
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    if (line.back() == ',') fields.emplace_back();
    if (!have_header) {
      t.header = std::move(fields);
      have_header = true;
      continue;
    }
    std::vector<CsvCell> row;
    row.reserve(fields.size());
    for (const std::string& s : fields) row.push_back(parse_cell(s));
    t.add_row(std::move(row));
  }
  return t;
}

CsvTable CsvTable::parse(const std::string& text) {
  std::istringstream is(text);
  return parse(is);
}

}  // namespace nhchain::cli
