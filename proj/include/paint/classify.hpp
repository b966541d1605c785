#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "paint/game.hpp"
#include "paint/graph.hpp"

namespace paint {

// Closed-form structural classifiers for the game values of connected graphs
// carrying two tokens per vertex, plus drivers that compare them against the
// exact solver over every small connected graph.  All classifiers throw
// std::invalid_argument on disconnected input.

// True iff the core of g is a single vertex, an even cycle, or K_{2,3}:
// exactly the graphs on which the coloring side survives two tokens per
// vertex with no bound on the number of rounds.
bool is_2_paintable_structural(const Graph& g);

// Least round count at which the marking side wins, for a connected graph
// that is not 2-paintable: 2 when the graph has an odd cycle, 4 when its
// core is K_{2,n} with n >= 4, and 3 otherwise.  Throws on 2-paintable
// input.
int m_classifier(const Graph& g);

// Greatest winning round count for the marking side, when a closed form is
// known.  `value` stays empty for graphs no clause covers (those sit
// strictly between n+2 and 2n-4).  `clauses` names every rule that fired:
//   "odd-cycle"             -> n      (the graph is an odd cycle)
//   "triangle"              -> 2n-3   (the graph contains a triangle)
//   "k24"                   -> n+1    (the graph is K_{2,4})
//   "four-vertex-triangle"  -> n+1    (n = 4 and a triangle is present)
//   "odd-cycle-core"        -> n+1    (the core is an odd cycle on n-1
//                                      vertices)
// Rules that fire together must agree on the value; a disagreement throws
// std::logic_error because it can only mean a classifier bug.
struct MExtreme {
  std::optional<int> value;
  std::vector<std::string> clauses;
};
MExtreme M_extremes_classifier(const Graph& g);

// Solver-computed values of a connected graph with two tokens per vertex,
// memoized process-wide (keyed by canonical form) so that every suite
// touching the same enumeration universe shares one computation.
struct GraphValues {
  bool two_paintable = false;
  std::optional<int> m;  // least round count the marking side wins
  std::optional<int> M;  // greatest such round count
  std::optional<int> q;  // forced over-marking cost
};
GraphValues graph_values(const Graph& g);

// One compared instance and the collected mismatches of a classifier-versus-
// solver sweep.  `classifier` / `solver` hold rendered values so the record
// is meaningful for every suite.
struct CrossRecord {
  std::string graph6;
  int n = 0;
  std::string classifier;
  std::string solver;
  bool match = false;
};
struct CrossReport {
  std::string suite;
  int instances = 0;
  std::vector<CrossRecord> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Sweeps every connected graph with at most n_max vertices (two tokens per
// vertex) and compares a classifier against the solver.  Suites:
//   "two-paintable"        is_2_paintable_structural vs the unbounded game (n_max <= 7)
//   "m"          m_classifier vs the least winning round count    (n_max <= 6)
//   "M-bounds"   n <= M <= 2n-3 for every non-2-paintable graph   (n_max <= 6)
//   "M-extremes" every fired clause matches M, and every graph with M in
//                {n, 2n-3, n+1} fires the matching clause          (n_max <= 6)
// Unknown suite names and out-of-range n_max throw std::invalid_argument.
CrossReport cross_validate(const std::string& suite, int n_max, int workers = 1);

// Round-count interval scan: for each connected graph, the full set of round
// counts at which the marking side wins, and whether that set is a
// contiguous integer interval.
struct ScanOptions {
  int n_max = 5;
  int workers = 1;
  // Budgets per graph; empty means two tokens everywhere.
  std::function<TokenAssignment(const Graph&)> budgets;
  // Keep only matching graphs; empty means keep all.
  std::function<bool(const Graph&)> filter;
};
struct ScanRow {
  std::string graph6;
  int n = 0;
  std::vector<int> losing;  // round counts the coloring side loses, ascending
  bool contiguous = false;  // vacuously true when `losing` is empty
  bool paintable = false;   // coloring side wins the unbounded game
};
struct ScanReport {
  std::vector<ScanRow> rows;
  int non_contiguous = 0;
  std::vector<std::string> counterexamples;  // graph6 of non-contiguous rows
  // Internal consistency breaches (an unbounded win alongside a nonempty
  // losing set); expected to stay empty.
  std::vector<std::string> failures;
};
ScanReport interval_scan(const ScanOptions& opts = {});

}  // namespace paint
