#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "xxring/sweep.hpp"

namespace xxring {

/// Provenance header emitted with every output file. Data rows are a pure
/// function of the parameters, so re-running with the same manifest
/// reproduces them byte for byte; only the timestamp line varies.
struct RunManifest {
  std::string tool;
  std::string version;
  std::string timestamp;  // ISO-8601 UTC
  std::vector<std::pair<std::string, std::string>> parameters;
  int quadrature_order = 64;
  std::string tolerances = "thermal=1e-10 concurrence=1e-9 fidelity=1e-8";
};

/// Manifest stamped with the current UTC time and tool version.
RunManifest make_manifest(std::vector<std::pair<std::string, std::string>> parameters);

/// %.17g-style formatting via std::to_chars: locale-independent and
/// round-trip exact for doubles.
std::string format_double(double v);

/// Comma-separated values with '.' decimal separator, '#'-prefixed manifest
/// comment lines, and a header row of column names.
void write_csv(std::ostream& os, const SweepTable& table, const RunManifest& manifest);

/// JSON object {"manifest": ..., "columns": [...], "rows": [[...], ...]}.
void write_json(std::ostream& os, const SweepTable& table, const RunManifest& manifest);

/// Reads back what write_csv / write_json produced (manifest lines skipped).
SweepTable read_csv(std::istream& is);
SweepTable read_json(std::istream& is);

}  // namespace xxring
