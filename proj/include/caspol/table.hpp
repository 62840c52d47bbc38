#pragma once

// Row-oriented tables and their CSV / JSON encodings. Numbers are written
// with 17 significant digits so that every double survives a round trip.

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace caspol {

/// monostate is an empty cell: blank in CSV, null in JSON.
using Cell = std::variant<std::monostate, double, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

[[nodiscard]] std::string format_number(double value);

/// Header line then one line per row, comma separated, LF endings.
void write_csv(std::ostream& out, const Table& table);
/// Array of objects keyed by the header, one object per row.
void write_json(std::ostream& out, const Table& table);

}  // namespace caspol
