#pragma once

// Machine verification of the scalar identities behind the invariant
// pipeline. Each suite exhaustively walks an integer parameter grid (the
// spec ranges are the defaults), checks an identity exactly, and reports
// the first counterexample verbatim. Suites are independent and pure;
// callers may run them concurrently.

#include <string>
#include <vector>

#include "twistknot/laurent.hpp"

namespace twistknot::verify {

/// Range overrides; 0 keeps a suite's default bound.
struct SuiteRanges {
  int max_n = 0;
  int max_p = 0;
  int max_m = 0;
};

struct IdentityReport {
  std::string suite;
  std::string range;
  long checked = 0;
  bool passed = false;
  std::string counterexample;  // "params | lhs | rhs"; empty when passed
  double millis = 0.0;
};

std::vector<std::string> suite_names();

/// Throws UnknownSuite for unregistered names.
IdentityReport run_suite(const std::string& name, const SuiteRanges& r = {});

std::vector<IdentityReport> run_all(const SuiteRanges& r = {});

}  // namespace twistknot::verify
