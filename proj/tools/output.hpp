#pragma once

// Tabular data files: a '#' comment header followed by CSV, or a JSON
// document with the same header fields. Floats are written with 12
// significant digits in scientific notation, independent of the C locale.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace igs::cli {

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Header {
  std::string command;
  /// Ordered key/value pairs describing the complete run configuration.
  std::vector<std::pair<std::string, std::string>> config;
  /// Command line that regenerates the file.
  std::string reproduce;
  /// Empty when running deterministically.
  std::string timestamp;
};

enum class Format { csv, json };

/// "%.11e" through std::to_chars.
std::string format_double(double v);
/// Shortest round-trip representation, used for configuration values.
std::string format_exact(double v);

void write_table(std::ostream& out, const Header& header, const Table& table, Format format);

}  // namespace igs::cli
