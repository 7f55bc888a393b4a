#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "randic/extremal.hpp"
#include "randic/harness.hpp"
#include "randic/thresholds.hpp"

namespace randic {

enum class OutputFormat { kText, kJson, kCsv };

/// "text", "json" or "csv"; throws std::invalid_argument otherwise.
OutputFormat parse_format(std::string_view text);

/// Shortest decimal that reads back to `value`; integers print without a
/// fraction, NaN prints as "nan".
std::string format_number(double value);

struct ThresholdEntry {
  double alpha = 0.0;
  ThresholdReport report;
  ClosedFormAudit audit;
};

// JSON output uses a fixed field order, so equal reports render to equal
// bytes. The verification report only carries wall time when `timing` is set.
std::string render(const TheoremId& t, const std::vector<ThresholdEntry>& entries, OutputFormat format);
std::string render(const VerificationReport& report, OutputFormat format, bool timing = false);
std::string render(const CharacterizationReport& report, OutputFormat format);
std::string render(const MonotonicityReport& report, OutputFormat format);

/// Single-line JSON of a family spec, e.g.
/// {"type":"hub_join","q":2,"t":[1,0]}.
std::string spec_json(const ExtremalSpec& spec);

}  // namespace randic
