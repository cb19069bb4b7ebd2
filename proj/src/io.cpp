#include "xxring/io.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "xxring/version.hpp"

namespace xxring {

namespace {

std::string now_utc_iso8601() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

RunManifest make_manifest(std::vector<std::pair<std::string, std::string>> parameters) {
  RunManifest m;
  m.tool = std::string(kToolName);
  m.version = std::string(kVersion);
  m.timestamp = now_utc_iso8601();
  m.parameters = std::move(parameters);
  return m;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const SweepTable& table, const RunManifest& manifest) {
  os << "# tool: " << manifest.tool << " " << manifest.version << "\n";
  os << "# generated: " << manifest.timestamp << "\n";
  os << "# quadrature_order: " << manifest.quadrature_order << "\n";
  os << "# tolerances: " << manifest.tolerances << "\n";
  for (const auto& [key, value] : manifest.parameters) {
    os << "# " << key << ": " << value << "\n";
  }
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    os << (c ? "," : "") << table.columns[c];
  }
  os << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << (c ? "," : "") << format_double(row[c]);
    }
    os << "\n";
  }
}

void write_json(std::ostream& os, const SweepTable& table, const RunManifest& manifest) {
  nlohmann::json j;
  j["manifest"] = {{"tool", manifest.tool},
                   {"version", manifest.version},
                   {"generated", manifest.timestamp},
                   {"quadrature_order", manifest.quadrature_order},
                   {"tolerances", manifest.tolerances}};
  for (const auto& [key, value] : manifest.parameters) {
    j["manifest"]["parameters"][key] = value;
  }
  j["columns"] = table.columns;
  j["rows"] = table.rows;
  os << j.dump(2) << "\n";
}

SweepTable read_csv(std::istream& is) {
  SweepTable table;
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      const std::size_t comma = line.find(',', pos);
      const std::size_t end = (comma == std::string::npos) ? line.size() : comma;
      fields.emplace_back(line.substr(pos, end - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (!header_seen) {
      table.columns = std::move(fields);
      header_seen = true;
      continue;
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const std::string& f : fields) {
      double v = 0.0;
      const auto res = std::from_chars(f.data(), f.data() + f.size(), v);
      if (res.ec != std::errc{} || res.ptr != f.data() + f.size()) {
        throw std::runtime_error("read_csv: malformed numeric field '" + f + "'");
      }
      row.push_back(v);
    }
    if (row.size() != table.columns.size()) {
      throw std::runtime_error("read_csv: row width does not match header");
    }
    table.rows.push_back(std::move(row));
  }
  if (!header_seen) throw std::runtime_error("read_csv: missing header row");
  return table;
}

SweepTable read_json(std::istream& is) {
  nlohmann::json j;
  is >> j;
  SweepTable table;
  table.columns = j.at("columns").get<std::vector<std::string>>();
  table.rows = j.at("rows").get<std::vector<std::vector<double>>>();
  return table;
}

}  // namespace xxring
