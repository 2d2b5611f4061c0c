#include "newman/report.hpp"

#include <algorithm>
#include <ostream>

#include "newman/errors.hpp"

namespace newman {

namespace {

std::string cell_text(const Json& row, const std::string& column) {
  const auto it = row.find(column);
  if (it == row.end() || it->is_null()) return "";
  if (it->is_string()) return it->get<std::string>();
  return it->dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "jsonl") return OutputFormat::jsonl;
  if (text == "csv") return OutputFormat::csv;
  if (text == "human") return OutputFormat::human;
  throw InvalidArgument("unknown output format '" + std::string(text) + "'");
}

void write_table(std::ostream& out, const Table& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::jsonl:
      for (const Json& row : table.rows) {
        Json ordered = Json::object();
        for (const auto& c : table.columns) ordered[c] = row.contains(c) ? row.at(c) : Json(nullptr);
        out << ordered.dump() << '\n';
      }
      break;
    case OutputFormat::csv:
      for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
      out << '\n';
      for (const Json& row : table.rows) {
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
          out << (i ? "," : "") << csv_escape(cell_text(row, table.columns[i]));
        }
        out << '\n';
      }
      break;
    case OutputFormat::human: {
      std::vector<std::size_t> width(table.columns.size());
      for (std::size_t i = 0; i < table.columns.size(); ++i) {
        width[i] = table.columns[i].size();
        for (const Json& row : table.rows) width[i] = std::max(width[i], cell_text(row, table.columns[i]).size());
      }
      auto emit = [&](auto&& text_of) {
        std::string line;
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
          std::string cell = text_of(i);
          if (i + 1 < table.columns.size()) cell.resize(width[i], ' ');
          line += cell;
          if (i + 1 < table.columns.size()) line += "  ";
        }
        out << line << '\n';
      };
      emit([&](std::size_t i) { return table.columns[i]; });
      emit([&](std::size_t i) { return std::string(width[i], '-'); });
      for (const Json& row : table.rows) emit([&](std::size_t i) { return cell_text(row, table.columns[i]); });
      break;
    }
  }
}

}  // namespace newman
