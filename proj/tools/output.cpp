#include "output.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <json.hpp>
#include <ostream>

#include "igs/version.hpp"

namespace igs::cli {

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::scientific, 11);
  return std::string(buf.data(), res.ptr);
}

std::string format_exact(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  return std::get<std::string>(c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  if (const auto* d = std::get_if<double>(&c)) {
    if (!std::isfinite(*d)) return nullptr;
    // Round through the 12-digit text form so both formats carry the same values.
    double rounded = 0.0;
    const std::string text = format_double(*d);
    std::from_chars(text.data(), text.data() + text.size(), rounded);
    return rounded;
  }
  return std::get<std::string>(c);
}

void write_csv(std::ostream& out, const Header& header, const Table& table) {
  out << "# igs " << kVersion << '\n';
  out << "# command: " << header.command << '\n';
  for (const auto& [key, value] : header.config) out << "# " << key << ": " << value << '\n';
  if (!header.timestamp.empty()) out << "# timestamp: " << header.timestamp << '\n';
  out << "# reproduce: " << header.reproduce << '\n';

  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const Header& header, const Table& table) {
  nlohmann::ordered_json doc;
  auto& h = doc["header"];
  h["tool"] = "igs";
  h["version"] = kVersion;
  h["command"] = header.command;
  auto& cfg = h["config"];
  cfg = nlohmann::ordered_json::object();
  for (const auto& [key, value] : header.config) cfg[key] = value;
  if (!header.timestamp.empty()) h["timestamp"] = header.timestamp;
  h["reproduce"] = header.reproduce;
  doc["columns"] = table.columns;
  auto& rows = doc["rows"];
  rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& c : row) r.push_back(cell_json(c));
    rows.push_back(std::move(r));
  }
  out << doc.dump(2) << '\n';
}

}  // namespace

void write_table(std::ostream& out, const Header& header, const Table& table, Format format) {
  if (format == Format::csv) {
    write_csv(out, header, table);
  } else {
    write_json(out, header, table);
  }
}

}  // namespace igs::cli
