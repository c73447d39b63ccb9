#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace multicut::cli {

using Cell = std::variant<std::int64_t, std::uint64_t, double, std::string>;

/// A named result table; one per command invocation.
struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class OutputFormat { kCsv, kJson };

/// CSV: header row, '.' decimal point, doubles to 15 significant digits.
void write_csv(std::ostream& os, const Table& table);
/// {"command": ..., "columns": [...], "rows": [{column: value, ...}, ...]}
void write_json(std::ostream& os, const Table& table);
void write_table(std::ostream& os, const Table& table, OutputFormat format);

}  // namespace multicut::cli
