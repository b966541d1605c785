#pragma once

#include <optional>
#include <string>
#include <vector>

namespace paint {

// Exhaustive verification suites: each one replays a characterization or
// identity on an enumerated universe of small graphs, comparing structure,
// scripted strategies, and independently computed values against the exact
// solver.  A failure line pinpoints the instance and the violated
// expectation; a healthy build produces none.

struct SuiteOptions {
  int workers = 1;
  // Shrinks a suite's default universe (quick smoke runs).  Values above the
  // default are clamped; anchor checks on fixed named graphs only run when
  // the universe is large enough to contain them.
  std::optional<int> n_max;
};

struct SuiteResult {
  std::string name;
  int checks = 0;                     // expectations evaluated
  std::vector<std::string> failures;  // one line per violated expectation
  double seconds = 0.0;
  bool ok() const { return failures.empty(); }
};

// All suite names in canonical execution order (cheapest first).
const std::vector<std::string>& suite_names();

// Runs one suite; throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace paint
