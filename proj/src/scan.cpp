#include "lapgirth/scan.hpp"

#include <algorithm>
#include <exception>

#include "lapgirth/graph6.hpp"
#include "lapgirth/parallel.hpp"

namespace lapgirth {

namespace {

bool is_named_equality_class(Classification c) {
  return c == Classification::C3 || c == Classification::K32 || c == Classification::U1;
}

struct Outcome {
  std::optional<VerificationRecord> record;
  std::vector<std::string> failed_lemmas;
  std::optional<std::string> error;
};

}  // namespace

std::vector<std::string> ScanReport::violations() const {
  std::vector<std::string> out;
  for (const auto& r : records) {
    if (!r.holds) out.push_back(r.graph6);
  }
  return out;
}

std::map<std::string, std::vector<std::string>> ScanReport::equality_cases() const {
  std::map<std::string, std::vector<std::string>> out{{"C3", {}}, {"K32", {}}, {"U1", {}}, {"Other", {}}};
  for (const auto& r : records) {
    if (!r.equality) continue;
    const std::string key = is_named_equality_class(r.classification) ? std::string(to_string(r.classification)) : "Other";
    out[key].push_back(r.graph6);
  }
  return out;
}

std::vector<VerificationRecord> ScanReport::classifier_mismatches() const {
  std::vector<VerificationRecord> out;
  for (const auto& r : records) {
    if (is_named_equality_class(r.classification) != r.equality) out.push_back(r);
  }
  return out;
}

std::optional<VerificationRecord> ScanReport::triangle_with_pendant() const {
  for (const auto& r : records) {
    if (r.classification == Classification::U1 && r.girth == Girth::finite(3)) return r;
  }
  return std::nullopt;
}

std::map<std::string, int> ScanReport::counts_by_classification() const {
  std::map<std::string, int> out;
  for (const auto& r : records) ++out[std::string(to_string(r.classification))];
  return out;
}

ScanReport scan_corpus(std::span<const Graph> graphs, const ScanOptions& options) {
  std::vector<Outcome> outcomes(graphs.size());
  parallel_for(graphs.size(), options.jobs, [&](std::size_t i) {
    Outcome& out = outcomes[i];
    try {
      out.record = verification_record(graphs[i]);
      if (options.run_lemmas) {
        for (const auto& [name, ok] : lemma_suite(graphs[i]).entries()) {
          if (!ok) out.failed_lemmas.push_back(name);
        }
      }
    } catch (const std::exception& e) {
      out.record.reset();
      out.error = e.what();
    }
  });

  ScanReport report;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    Outcome& out = outcomes[i];
    const std::string key = out.record ? out.record->graph6 : to_graph6(graphs[i]);
    if (out.error) report.errors.push_back({key, *out.error});
    for (auto& lemma : out.failed_lemmas) report.lemma_failures.push_back({key, std::move(lemma)});
    if (out.record) report.records.push_back(std::move(*out.record));
  }
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const auto& a, const auto& b) { return a.graph6 < b.graph6; });
  std::stable_sort(report.lemma_failures.begin(), report.lemma_failures.end(),
                   [](const auto& a, const auto& b) { return a.graph6 < b.graph6; });
  std::stable_sort(report.errors.begin(), report.errors.end(),
                   [](const auto& a, const auto& b) { return a.graph6 < b.graph6; });
  return report;
}

}  // namespace lapgirth
