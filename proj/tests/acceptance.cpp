// Acceptance gate: ten end-to-end criteria, one PASS/FAIL line each.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <initializer_list>
#include <string>

#include "paint/canon.hpp"
#include "paint/classify.hpp"
#include "paint/game.hpp"
#include "paint/graph.hpp"
#include "paint/solver.hpp"
#include "paint/verify.hpp"

namespace {

using paint::Graph;
using paint::ScanOptions;
using paint::ScanRow;
using paint::Solver;
using paint::SuiteResult;
using paint::TokenAssignment;

struct Outcome {
  bool ok = false;
  std::string detail;  // shown only on failure
};

Outcome from_suites(std::initializer_list<const char*> names) {
  for (const char* name : names) {
    SuiteResult r = paint::run_suite(name);
    if (!r.ok()) {
      return {false, std::string(name) + ": " +
                         (r.failures.empty() ? "no checks ran" : r.failures.front())};
    }
    if (r.checks == 0) return {false, std::string(name) + ": no checks ran"};
  }
  return {true, ""};
}

}  // namespace

int main() {
  int failed = 0;
  auto criterion = [&](int id, const char* desc, const std::function<Outcome()>& run) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2d. %s (%.2fs)\n", o.ok ? "PASS" : "FAIL", id, desc, secs);
    if (!o.ok) {
      ++failed;
      if (!o.detail.empty()) std::printf("         %s\n", o.detail.c_str());
    }
    std::fflush(stdout);
  };

  criterion(1, "odd cycles C3, C5, C7 lose the t-round game exactly for 2 <= t <= n",
            [] { return from_suites({"cycle-intervals"}); });

  criterion(2, "K_{2,4}: smallest losing round count is 4, largest is 7", [] {
    Solver solver(paint::make_K2n(4));
    TokenAssignment f = TokenAssignment::uniform(paint::make_K2n(4), 2);
    auto m = solver.compute_m(f);
    auto M = solver.compute_M(f);
    if (m != 4) return Outcome{false, "m came out " + (m ? std::to_string(*m) : "none")};
    if (M != 7) return Outcome{false, "M came out " + (M ? std::to_string(*M) : "none")};
    return Outcome{true, ""};
  });

  criterion(3, "largest losing round count satisfies M = 2n - q on every graph up to n=6",
            [] { return from_suites({"qgame"}); });

  criterion(4, "kill costs 1, 2, 3 match their structural patterns over all budgets up to n=5",
            [] { return from_suites({"kill-cost-patterns"}); });

  criterion(5, "smallest losing round count is 2, 3 or 4 per the shape trichotomy up to n=6",
            [] { return from_suites({"m-classification"}); });

  criterion(6, "largest-losing-round bounds and extreme families hold up to n=6",
            [] { return from_suites({"M-bounds", "M-extremes"}); });

  criterion(7, "graphs surviving forever on two tokens have even-cycle, K_{2,3} or trivial cores (n<=7)",
            [] { return from_suites({"two-paintable"}); });

  criterion(8, "declared marking and coloring strategies beat an optimal adversary in every game",
            [] { return from_suites({"strategies"}); });

  criterion(9, "restricting the coloring side to maximal responses never changes a verdict (n<=5)",
            [] { return from_suites({"dominance"}); });

  criterion(10, "losing round counts form one contiguous interval on every graph up to n=5", [] {
    ScanOptions opts;
    opts.n_max = 5;
    paint::ScanReport report = interval_scan(opts);
    if (!report.failures.empty()) return Outcome{false, report.failures.front()};
    if (report.non_contiguous != 0) {
      return Outcome{false, "non-contiguous: " + report.counterexamples.front()};
    }
    const std::string c5 = paint::canonical_form(paint::make_cycle(5));
    for (const ScanRow& row : report.rows) {
      if (row.graph6 != c5) continue;
      if (row.losing == std::vector<int>{2, 3, 4, 5}) return Outcome{true, ""};
      return Outcome{false, "C5 losing set has " + std::to_string(row.losing.size()) +
                                " entries, expected {2,3,4,5}"};
    }
    return Outcome{false, "C5 row missing from the scan"};
  });

  std::printf("%d/10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
