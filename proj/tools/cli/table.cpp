#include "cli/table.hpp"

#include <iomanip>
#include <locale>
#include <sstream>

#include <json.hpp>

namespace multicut::cli {

namespace {

std::string format_cell(const Cell& cell) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  std::visit(
      [&](const auto& value) {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, double>) {
          out << std::setprecision(15) << value;
        } else if constexpr (std::is_same_v<T, std::string>) {
          // Quote only when a separator would otherwise split the field.
          if (value.find_first_of(",\"\n") != std::string::npos) {
            out << '"';
            for (char c : value) out << (c == '"' ? "\"\"" : std::string(1, c));
            out << '"';
          } else {
            out << value;
          }
        } else {
          out << value;
        }
      },
      cell);
  return out.str();
}

}  // namespace

void write_csv(std::ostream& os, const Table& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    os << (c == 0 ? "" : ",") << table.columns[c];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c == 0 ? "" : ",") << format_cell(row[c]);
    os << '\n';
  }
}

void write_json(std::ostream& os, const Table& table) {
  nlohmann::ordered_json doc;
  doc["command"] = table.command;
  doc["columns"] = table.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json record = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size() && c < table.columns.size(); ++c) {
      std::visit([&](const auto& value) { record[table.columns[c]] = value; }, row[c]);
    }
    rows.push_back(std::move(record));
  }
  doc["rows"] = std::move(rows);
  os << doc.dump(2) << '\n';
}

void write_table(std::ostream& os, const Table& table, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    write_json(os, table);
  } else {
    write_csv(os, table);
  }
}

}  // namespace multicut::cli
