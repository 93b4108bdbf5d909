#include "report_table.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "phik/errors.hpp"

namespace phik::cli {

OutputFormat parse_format(std::string_view name) {
  if (name == "plain") return OutputFormat::plain;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw DomainError("unknown format '" + std::string(name) + "'");
}

std::string format_real(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15Lg", v);
  return buf;
}

Cell Cell::of_text(std::string s) { return {Kind::text, std::move(s), 0, false}; }
Cell Cell::of_exact(const BigInt& v) { return {Kind::exact, to_decimal(v), 0, false}; }
Cell Cell::of_exact(const Rational& v) { return {Kind::exact, to_decimal(v), 0, false}; }
Cell Cell::of_real(long double v) {
  const std::string text = format_real(v);
  return {Kind::real, text, std::stod(text), false};
}
Cell Cell::of_bool(bool b) { return {Kind::boolean, b ? "true" : "false", 0, b}; }
Cell Cell::of_integer(unsigned long long v) {
  return {Kind::integer, std::to_string(v), 0, false};
}

namespace {

nlohmann::ordered_json to_json(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::real: return c.real;
    case Cell::Kind::boolean: return c.flag;
    case Cell::Kind::integer: return std::stoull(c.text);
    default: return c.text;
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string render(const Table& table, OutputFormat format,
                   const std::optional<std::string>& meta) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::json: {
      nlohmann::ordered_json doc;
      doc["report"] = table.kind;
      if (meta) doc["meta"] = *meta;
      doc["columns"] = table.columns;
      auto rows = nlohmann::ordered_json::array();
      for (const auto& row : table.rows) {
        nlohmann::ordered_json record;
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
          record[table.columns[i]] = to_json(row[i]);
        }
        rows.push_back(std::move(record));
      }
      doc["rows"] = std::move(rows);
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv: {
      if (meta) out << "# " << *meta << '\n';
      for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << table.columns[i];
      }
      out << '\n';
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          out << (i ? "," : "") << csv_escape(row[i].text);
        }
        out << '\n';
      }
      break;
    }
    case OutputFormat::plain: {
      if (meta) out << "# " << *meta << '\n';
      std::vector<std::size_t> width(table.columns.size());
      for (std::size_t i = 0; i < table.columns.size(); ++i) {
        width[i] = table.columns[i].size();
        for (const auto& row : table.rows) width[i] = std::max(width[i], row[i].text.size());
      }
      auto line = [&](auto&& cell_text) {
        std::string s;
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
          const std::string t = cell_text(i);
          if (i) s += "  ";
          s += std::string(width[i] - t.size(), ' ') + t;
        }
        out << s << '\n';
      };
      line([&](std::size_t i) { return table.columns[i]; });
      for (const auto& row : table.rows) line([&](std::size_t i) { return row[i].text; });
      break;
    }
  }
  return out.str();
}

}  // namespace phik::cli
