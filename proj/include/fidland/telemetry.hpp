#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "fidland/runner.hpp"

namespace fidland {

// CSV layout: a short '#'-prefixed metadata preamble, one header line, one
// row per control tick. Detection columns are left empty on ticks without
// a detection. Formatting is fixed so identical runs serialize to
// identical bytes.
extern const char* const kCsvHeader;

std::string to_csv(const RunRecord& rec);
void write_csv_file(const RunRecord& rec, const std::string& path);

// Inverse of to_csv, tolerant of missing metadata (header + rows suffice).
RunRecord read_csv(std::istream& in, const std::string& origin);
RunRecord read_csv_file(const std::string& path);

nlohmann::json to_json(const RunRecord& rec);
void write_json_file(const RunRecord& rec, const std::string& path);

nlohmann::json to_json(const TypeStats& st);
nlohmann::json to_json(const BatchSummary& s);

} // namespace fidland
