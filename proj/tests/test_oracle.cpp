#include "doctest.h"
#include "paint/canon.hpp"
#include "paint/game.hpp"
#include "paint/graph.hpp"
#include "paint/solver.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

using namespace paint;

// A deliberately plain reference solver: no bit packing, no state
// normalization, no response filtering, no move-ordering tricks. It leans
// only on the public rule functions, so any disagreement with Solver points
// at one of Solver's shortcuts.
namespace {

constexpr int kInf = 1 << 20;

using StateKey = std::tuple<VertexSet, std::vector<int>, int>;

StateKey key_of(const GameState& s) { return {s.colored, s.tokens, s.rounds_left}; }

Verdict reference_value(const Graph& g, const GameState& s, const Variant& var,
                        std::map<StateKey, Verdict>& memo) {
  if (auto tv = terminal_verdict(g, s, var)) return *tv;
  const StateKey key = key_of(s);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Verdict result = Verdict::PainterWins;
  for (VertexSet mv : lister_moves(g, s, var)) {
    bool escape = false;
    for (VertexSet x : painter_responses(g, s, mv, /*maximal_only=*/false)) {
      if (reference_value(g, apply_round(g, s, var, mv, x), var, memo) ==
          Verdict::PainterWins) {
        escape = true;
        break;
      }
    }
    if (!escape) {
      result = Verdict::ListerWins;
      break;
    }
  }
  memo.emplace(key, result);
  return result;
}

int reference_cost(const Graph& g, const GameState& s, std::map<StateKey, int>& memo) {
  if (dead_vertices(g, s)) return 0;
  if (s.colored == g.vertices()) return kInf;
  const StateKey key = key_of(s);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  int best = kInf;
  for (VertexSet mv : lister_moves(g, s, Variant::cost())) {
    int worst = 0;
    for (VertexSet x : painter_responses(g, s, mv, false)) {
      worst = std::max(worst,
                       reference_cost(g, apply_round(g, s, Variant::cost(), mv, x), memo));
      if (worst >= kInf) break;
    }
    if (worst < kInf) best = std::min(best, vs_size(mv) - 1 + worst);
  }
  memo.emplace(key, best);
  return best;
}

// Same game except the marking side may also mark colored vertices that
// still hold tokens. Wasting tokens this way should never help it.
Verdict reference_value_marking_colored(const Graph& g, const GameState& s,
                                        std::map<StateKey, Verdict>& memo) {
  const Variant var = Variant::unbounded();
  if (auto tv = terminal_verdict(g, s, var)) return *tv;
  const StateKey key = key_of(s);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  VertexSet markable = 0;
  for (int v = 0; v < g.order(); ++v)
    if (s.tokens[v] > 0) markable |= vbit(v);
  Verdict result = Verdict::PainterWins;
  for (VertexSet mv = markable & (0 - markable); mv;) {
    bool escape = false;
    for (VertexSet x : painter_responses(g, s, mv, false)) {
      GameState next = s;
      for (VertexSet m = mv; m; m &= m - 1) --next.tokens[vs_lowest(m)];
      next.colored |= x;
      if (reference_value_marking_colored(g, next, memo) == Verdict::PainterWins) {
        escape = true;
        break;
      }
    }
    if (!escape) {
      result = Verdict::ListerWins;
      break;
    }
    if (mv == markable) break;
    mv = (mv - markable) & markable;
  }
  memo.emplace(key, result);
  return result;
}

}  // namespace

TEST_CASE("solver agrees with the reference search on every small game") {
  SolverOptions exhaustive;
  exhaustive.maximal_responses = false;
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      Solver fast(g);
      Solver full(g, exhaustive);
      for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        std::vector<int> budgets(n);
        for (int v = 0; v < n; ++v) budgets[v] = 1 + ((bits >> v) & 1);
        const TokenAssignment f = TokenAssignment::from_values(budgets);

        {
          const Variant var = Variant::unbounded();
          std::map<StateKey, Verdict> memo, memo_colored;
          const GameState root = initial_state(g, f, var);
          const Verdict expect = reference_value(g, root, var, memo);
          CHECK(fast.solve(f, var) == expect);
          CHECK(full.solve(f, var) == expect);
          CHECK(reference_value_marking_colored(g, root, memo_colored) == expect);
        }

        for (int t = 1; t <= f.sum() + 1; ++t) {
          const Variant var = Variant::exact(t);
          std::map<StateKey, Verdict> memo;
          const Verdict expect = reference_value(g, initial_state(g, f, var), var, memo);
          CHECK(fast.solve(f, var) == expect);
          CHECK(full.solve(f, var) == expect);
        }

        {
          std::map<StateKey, int> memo;
          const int expect = reference_cost(g, initial_state(g, f, Variant::cost()), memo);
          const CostValue got = fast.compute_q(f);
          CHECK((expect >= kInf) == !got.has_value());
          if (got.has_value()) CHECK(*got == expect);
          const CostValue got_full = full.compute_q(f);
          CHECK(got == got_full);
        }
      }
    }
  }
}

TEST_CASE("hand-checked verdicts anchor the reference search") {
  // An edge with budgets (1,2): marking both forces the light endpoint to be
  // colored and the heavy one still has a spare token, so the coloring side
  // survives every line of play.
  const Graph p2 = make_path(2);
  std::map<StateKey, Verdict> memo;
  const TokenAssignment light = TokenAssignment::from_values({1, 2});
  CHECK(reference_value(p2, initial_state(p2, light, Variant::unbounded()),
                        Variant::unbounded(), memo) == Verdict::PainterWins);
  CHECK(Solver(p2).solve(light, Variant::unbounded()) == Verdict::PainterWins);

  // One token everywhere on a three-vertex path: marking all three leaves
  // only the two endpoints colorable and the middle vertex dies.
  const Graph p3 = make_path(3);
  std::map<StateKey, Verdict> memo3;
  const TokenAssignment ones = TokenAssignment::uniform(p3, 1);
  CHECK(reference_value(p3, initial_state(p3, ones, Variant::unbounded()),
                        Variant::unbounded(), memo3) == Verdict::ListerWins);
  CHECK(Solver(p3).solve(ones, Variant::unbounded()) == Verdict::ListerWins);
}
