#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "orbitcensus/census.hpp"

namespace orbitcensus::io {

constexpr const char* kSchemaLine = "# orbit-census v1";

enum class Format { csv, json };

[[nodiscard]] auto parse_format(const std::string& text) -> Format;
[[nodiscard]] auto extension(Format f) -> std::string;

/// One cell: text (also used for big integers), integer or real.
using Cell = std::variant<std::string, long long, double>;

/// Run parameters recorded as `# key=value` comment lines (CSV) or a `params` object (JSON).
using Params = std::vector<std::pair<std::string, std::string>>;

/// A flat table with named columns.
struct Document {
  Params params;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Shortest decimal that round-trips the double.
[[nodiscard]] auto format_real(double x) -> std::string;

void write(std::ostream& out, const Document& doc, Format format);

/// Census rows `n,p,engine,vector,size_words,size_necklaces`; an absent necklace size is empty.
[[nodiscard]] auto census_document(const CensusTable& table, Params params) -> Document;

/// Reads back a census CSV written by `write(census_document(...))`.
[[nodiscard]] auto read_census_csv(std::istream& in) -> CensusTable;

}  // namespace orbitcensus::io
