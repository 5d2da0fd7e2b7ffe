#include "orbitcensus/census_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "orbitcensus/error.hpp"

namespace orbitcensus::io {

namespace {

auto cell_text(const Cell& c) -> std::string {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return format_real(std::get<double>(c));
}

auto split(const std::string& line, char sep) -> std::vector<std::string> {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

auto parse_int(const std::string& text, const char* what) -> int {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParameterError(std::string("malformed ") + what + " '" + text + "'");
  }
  return v;
}

}  // namespace

auto parse_format(const std::string& text) -> Format {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw ParameterError("unknown format '" + text + "' (expected csv|json)");
}

auto extension(Format f) -> std::string { return f == Format::csv ? "csv" : "json"; }

auto format_real(double x) -> std::string {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

void write(std::ostream& out, const Document& doc, Format format) {
  if (format == Format::csv) {
    out << kSchemaLine << '\n';
    for (const auto& [k, v] : doc.params) out << "# " << k << '=' << v << '\n';
    for (std::size_t i = 0; i < doc.columns.size(); ++i) out << (i ? "," : "") << doc.columns[i];
    out << '\n';
    for (const auto& row : doc.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
      out << '\n';
    }
    return;
  }
  nlohmann::ordered_json j;
  j["schema"] = "orbit-census v1";
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : doc.params) j["params"][k] = v;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : doc.rows) {
    nlohmann::ordered_json r;
    for (std::size_t i = 0; i < row.size() && i < doc.columns.size(); ++i) {
      std::visit([&](const auto& x) { r[doc.columns[i]] = x; }, row[i]);
    }
    j["rows"].push_back(std::move(r));
  }
  out << j.dump(2) << '\n';
}

auto census_document(const CensusTable& table, Params params) -> Document {
  Document doc{std::move(params), {"n", "p", "engine", "vector", "size_words", "size_necklaces"}, {}};
  doc.rows.reserve(table.size());
  for (const auto& r : table.records()) {
    doc.rows.push_back({static_cast<long long>(table.n()), static_cast<long long>(table.p()), to_string(table.engine()),
                        r.vector.to_string(), to_decimal(r.size_words),
                        r.size_necklaces ? to_decimal(*r.size_necklaces) : std::string()});
  }
  return doc;
}

auto read_census_csv(std::istream& in) -> CensusTable {
  std::string line;
  bool header_seen = false;
  int n = -1, p = -1;
  Engine engine = Engine::best;
  bool prime_only = false;
  std::vector<ClusterRecord> records;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line == "# prime_only=1" || line == "# prime_only=true") prime_only = true;
      continue;
    }
    if (!header_seen) {
      if (line != "n,p,engine,vector,size_words,size_necklaces") throw ParameterError("not a census CSV header: " + line);
      header_seen = true;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 6) throw ParameterError("census row needs 6 fields: " + line);
    const int rn = parse_int(f[0], "n");
    const int rp = parse_int(f[1], "p");
    if (n < 0) {
      n = rn;
      p = rp;
      engine = parse_engine(f[2]);
    } else if (rn != n || rp != p) {
      throw ParameterError("census rows disagree on n or p");
    }
    ClusterRecord r{EdgeCountVector::parse(f[3]), parse_decimal(f[4]), std::nullopt};
    if (r.vector.order() != p) throw ParameterError("vector order does not match p in row: " + line);
    if (!f[5].empty()) r.size_necklaces = parse_decimal(f[5]);
    records.push_back(std::move(r));
  }
  if (!header_seen || n < 0) throw ParameterError("census CSV holds no rows");
  CensusTable table(n, p, engine, std::move(records));
  table.set_prime_only(prime_only);
  return table;
}

}  // namespace orbitcensus::io
