#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lapgirth/graph.hpp"
#include "lapgirth/spectra.hpp"

namespace lapgirth::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolations = 1,
  kExitUsage = 2,
  kExitInternal = 3,
};

// Bad command-line input; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FamilyGraph {
  Graph graph;
  std::optional<ClosedFormSpectrum> closed_form;
};

// Family specs: "cycle N", "path N", "complete N", "k R1,R2,...",
// "ut G,T", "gadget G1..G4". Throws UsageError naming the offending
// character position within `args`.
FamilyGraph parse_family(const std::string& kind, const std::string& args);

// Entry point shared by the executable and the tests. `args` excludes the
// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lapgirth::cli
