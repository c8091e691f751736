#pragma once

#include <string>

#include "json.hpp"

#include "lapgirth/scan.hpp"

namespace lapgirth {

inline constexpr const char* kVersion = "1.0.0";

struct ReportMeta {
  std::string version = kVersion;
  std::string command;
  std::string timestamp;  // ISO 8601, UTC
};

std::string utc_timestamp();

// {meta:{version,command,timestamp},
//  records:[{graph6,n,girth,count,bound,holds,equality,classification}],
//  summary:{total,violations,equality_cases:{C3,K32,U1,Other},
//           classifications,lemma_failures,errors,classifier_mismatches,
//           triangle_with_pendant}}
// girth, count and bound are null for acyclic graphs.
nlohmann::ordered_json report_to_json(const ScanReport& report, const ReportMeta& meta);

nlohmann::ordered_json record_to_json(const VerificationRecord& record);

// Header graph6,n,girth,count,bound,holds,equality,classification; empty
// cells where the JSON has null.
std::string report_to_csv(const ScanReport& report);

}  // namespace lapgirth
