#pragma once

#include <iosfwd>
#include <string>

#include "sphereq/common.hpp"
#include "sphereq/groupspec.hpp"
#include "sphereq/registry.hpp"

namespace sphereq {

enum class ReportStatus { pass, fail, inconclusive };

std::string to_string(ReportStatus s);

/// Analysis report for one representation. The JSON document is reproducible
/// byte-for-byte from (entry/spec, config): all randomness is derived from
/// config.seed and the entry id, keys are sorted, and no timestamps or
/// environment data enter.
struct AnalysisReport {
  std::string id;
  ReportStatus status = ReportStatus::pass;
  std::string json_text;  // schema 1 document
};

/// Full pipeline on a registry entry, comparing against the expected values.
AnalysisReport verify_entry(const std::string& id, const Config& config);

/// Same pipeline without expected-value comparison, for ad-hoc specs.
AnalysisReport analyze(const GroupSpec& spec, const Config& config);

/// Runs verify_entry over the whole registry, printing one line per entry and
/// reproducing the table columns. Returns the aggregate status.
ReportStatus verify_tables(const Config& config, std::ostream& out,
                           std::string* json_out = nullptr);

Config config_from_json(const std::string& text);
std::string config_to_json(const Config& config);

}  // namespace sphereq
