#pragma once

#include <iosfwd>
#include <string>

#include "critcode/bounds.hpp"

namespace critcode {

enum class ReportFormat { table, json, csv };

ReportFormat report_format_from_name(const std::string& name);

/// Deterministic rendering: identical reports produce identical bytes. The
/// optional stamp line is off by default so outputs are reproducible.
std::string render_report(const BoundReport& r, ReportFormat format, bool timestamps = false);

/// Inverse of the JSON rendering; round-trips every field of the report.
BoundReport report_from_json(const std::string& text);

/// Matrix text format: first line "q n k", then k lines of n integers in
/// [0, q) (base-p encoded field elements).
LinearCode parse_code_file(std::istream& in);
LinearCode parse_code_file(const std::string& path);
std::string code_to_file(const LinearCode& c);

}  // namespace critcode
