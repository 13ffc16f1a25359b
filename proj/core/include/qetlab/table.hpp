#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace qet {

// One tabular cell. monostate renders as an empty field.
using Cell = std::variant<std::monostate, double, long long, bool, std::string>;

// Column-named dataset with deterministic formatting: doubles are
// written with the shortest round-trip representation, so identical
// inputs produce byte-identical output.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
  // Comma-delimited, '.' decimal separator, '\n' line endings, header
  // always present. Fields containing delimiters are quoted.
  void write_csv(std::ostream& os) const;
};

// Shortest representation that round-trips through double.
std::string format_double(double x);

std::string format_cell(const Cell& cell);

}  // namespace qet
