#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lapgirth/graph.hpp"
#include "lapgirth/theorems.hpp"

namespace lapgirth {

struct LemmaFailure {
  std::string graph6;
  std::string lemma;
};

struct ScanError {
  std::string graph6;
  std::string message;
};

struct ScanReport {
  std::vector<VerificationRecord> records;  // sorted by graph6
  std::vector<LemmaFailure> lemma_failures;
  std::vector<ScanError> errors;

  // graph6 keys of records whose bound (or cycle count) failed.
  std::vector<std::string> violations() const;
  // Equality records grouped under C3, K32, U1 or Other (anything not
  // structurally one of the first three).
  std::map<std::string, std::vector<std::string>> equality_cases() const;
  // Records where "classified C3/K32/U1" and "equality" disagree.
  std::vector<VerificationRecord> classifier_mismatches() const;
  // The triangle with one pendant vertex (U1 with girth 3), if scanned.
  std::optional<VerificationRecord> triangle_with_pendant() const;
  std::map<std::string, int> counts_by_classification() const;
};

struct ScanOptions {
  int jobs = 1;
  bool run_lemmas = true;
};

// Runs verification_record, classify_equality and lemma_suite on every
// graph. Per-graph failures are collected in `errors` and the scan goes
// on. Output order is independent of `jobs`.
ScanReport scan_corpus(std::span<const Graph> graphs, const ScanOptions& options = {});

}  // namespace lapgirth
