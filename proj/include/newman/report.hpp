#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "newman/ledger.hpp"

namespace newman {

enum class OutputFormat { jsonl, csv, human };

OutputFormat parse_output_format(std::string_view text);

// Rows are keyed by column name; missing cells print empty (csv/human) or null (jsonl).
struct Table {
  std::vector<std::string> columns;
  std::vector<Json> rows;
};

void write_table(std::ostream& out, const Table& table, OutputFormat format);

}  // namespace newman
