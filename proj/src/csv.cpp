#include "art/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace art {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_cell(const std::string& raw, std::size_t row, const std::string& col) {
  const std::string s = trim(raw);
  if (s.empty()) return std::numeric_limits<double>::quiet_NaN();
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw DataError("row " + std::to_string(row) + ", column '" + col + "': cannot parse '" + s + "'");
  }
}

}  // namespace

const std::vector<double>& Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return cols[i];
  }
  throw DataError("no such column: '" + name + "'");
}

SamplePair Table::pair(std::size_t a, std::size_t b) const {
  SamplePair s;
  for (std::size_t i = 0; i < rows(); ++i) {
    if (std::isfinite(cols[a][i]) && std::isfinite(cols[b][i])) s.add(cols[a][i], cols[b][i]);
  }
  return s;
}

Table ingest_csv(std::istream& in, const std::vector<std::string>& select) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty CSV stream");
  std::vector<std::string> header = split_line(line);
  for (auto& h : header) h = trim(h);

  std::vector<std::size_t> pick;
  if (select.empty()) {
    for (std::size_t i = 0; i < header.size(); ++i) pick.push_back(i);
  } else {
    for (const auto& sel : select) {
      const auto it = std::find(header.begin(), header.end(), sel);
      if (it != header.end()) {
        pick.push_back(static_cast<std::size_t>(it - header.begin()));
        continue;
      }
      // Fall back to a 0-based column index.
      std::size_t idx = 0;
      const auto [p, ec] = std::from_chars(sel.data(), sel.data() + sel.size(), idx);
      if (ec == std::errc{} && p == sel.data() + sel.size() && idx < header.size()) {
        pick.push_back(idx);
      } else {
        throw DataError("no such column: '" + sel + "'");
      }
    }
  }

  Table t;
  for (const auto i : pick) t.names.push_back(header[i]);
  t.cols.resize(pick.size());

  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    const auto fields = split_line(line);
    for (std::size_t k = 0; k < pick.size(); ++k) {
      const std::string cell = pick[k] < fields.size() ? fields[pick[k]] : "";
      t.cols[k].push_back(parse_cell(cell, row, t.names[k]));
    }
  }
  if (t.rows() == 0) throw DataError("CSV contains no data rows");
  return t;
}

Table ingest_csv_file(const std::string& path, const std::vector<std::string>& select) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  return ingest_csv(in, select);
}

void write_csv(std::ostream& out, const SamplePair& sample, const std::string& xname,
               const std::string& yname) {
  out << xname << ',' << yname << '\n';
  out.precision(17);
  for (std::size_t i = 0; i < sample.size(); ++i) out << sample.x[i] << ',' << sample.y[i] << '\n';
}

}  // namespace art
