#include "lapgirth/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

namespace lapgirth {

using nlohmann::ordered_json;

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ordered_json record_to_json(const VerificationRecord& r) {
  ordered_json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["girth"] = r.girth.is_finite() ? ordered_json(r.girth.value()) : ordered_json(nullptr);
  j["count"] = r.count ? ordered_json(*r.count) : ordered_json(nullptr);
  j["bound"] = r.bound ? ordered_json(*r.bound) : ordered_json(nullptr);
  j["holds"] = r.holds;
  j["equality"] = r.equality;
  j["classification"] = std::string(to_string(r.classification));
  return j;
}

ordered_json report_to_json(const ScanReport& report, const ReportMeta& meta) {
  ordered_json doc;
  doc["meta"] = {{"version", meta.version}, {"command", meta.command}, {"timestamp", meta.timestamp}};

  ordered_json records = ordered_json::array();
  for (const auto& r : report.records) records.push_back(record_to_json(r));
  doc["records"] = std::move(records);

  ordered_json summary;
  summary["total"] = report.records.size();
  summary["violations"] = report.violations();
  ordered_json eq;
  for (const char* key : {"C3", "K32", "U1", "Other"}) eq[key] = report.equality_cases().at(key);
  summary["equality_cases"] = std::move(eq);

  ordered_json classes = ordered_json::object();
  for (const auto& [name, count] : report.counts_by_classification()) classes[name] = count;
  summary["classifications"] = std::move(classes);

  ordered_json lemmas = ordered_json::array();
  for (const auto& f : report.lemma_failures) lemmas.push_back({{"graph6", f.graph6}, {"lemma", f.lemma}});
  summary["lemma_failures"] = std::move(lemmas);

  ordered_json errors = ordered_json::array();
  for (const auto& e : report.errors) errors.push_back({{"graph6", e.graph6}, {"message", e.message}});
  summary["errors"] = std::move(errors);

  ordered_json mismatches = ordered_json::array();
  for (const auto& r : report.classifier_mismatches()) mismatches.push_back(record_to_json(r));
  summary["classifier_mismatches"] = std::move(mismatches);

  const auto pendant = report.triangle_with_pendant();
  summary["triangle_with_pendant"] = pendant ? record_to_json(*pendant) : ordered_json(nullptr);
  doc["summary"] = std::move(summary);
  return doc;
}

std::string report_to_csv(const ScanReport& report) {
  std::ostringstream out;
  out << "graph6,n,girth,count,bound,holds,equality,classification\n";
  for (const auto& r : report.records) {
    // graph6 uses only bytes 63..126; none needs CSV quoting.
    out << r.graph6 << ',' << r.n << ',';
    if (r.girth.is_finite()) out << r.girth.value();
    out << ',';
    if (r.count) out << *r.count;
    out << ',';
    if (r.bound) out << *r.bound;
    out << ',' << (r.holds ? "true" : "false") << ',' << (r.equality ? "true" : "false") << ','
        << to_string(r.classification) << '\n';
  }
  return out.str();
}

}  // namespace lapgirth
