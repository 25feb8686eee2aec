#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "art/types.hpp"

namespace art {

// Columnar table of named numeric variables; missing cells are NaN.
struct Table {
  std::vector<std::string> names;
  std::vector<std::vector<double>> cols;

  std::size_t rows() const { return cols.empty() ? 0 : cols[0].size(); }
  std::size_t width() const { return cols.size(); }

  const std::vector<double>& column(const std::string& name) const;

  // Rows where both columns are finite (pairwise deletion).
  SamplePair pair(std::size_t a, std::size_t b) const;
};

// Reads a comma-separated stream with a mandatory header row. `select` picks
// columns by header name or 0-based index string; empty selects all columns.
Table ingest_csv(std::istream& in, const std::vector<std::string>& select = {});

Table ingest_csv_file(const std::string& path, const std::vector<std::string>& select = {});

void write_csv(std::ostream& out, const SamplePair& sample, const std::string& xname = "x",
               const std::string& yname = "y");

}  // namespace art
