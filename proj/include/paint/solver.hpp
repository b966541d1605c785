#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>

#include "paint/game.hpp"

namespace paint {

// Total over-marking (sum of |marked| - 1 per round) the marking side must
// pay to force a dead vertex; nullopt when the coloring side can survive.
using CostValue = std::optional<int>;

struct SolverOptions {
  int max_n = 10;                               // refuse larger graphs (packing allows up to 14)
  std::size_t memo_cap = std::size_t(1) << 24;  // refuse to cache more states than this
  bool maximal_responses = true;                // restrict the coloring side to maximal responses
};

// Exhaustive game solver. States are packed into 64-bit keys and memoized;
// the round-limited game's cache is keyed only on (colored, tokens,
// rounds_left), so scans over different total round counts share it.
class Solver {
 public:
  explicit Solver(const Graph& g, SolverOptions opts = {});

  Verdict solve(const TokenAssignment& f, const Variant& var);
  // Value of a mid-game position (not for the cost variant; see cost_value).
  Verdict value(const GameState& s, const Variant& var);

  // Least / greatest round count t in [max f, sum f] where the marking side
  // wins the t-round game; nullopt if it never does.
  std::optional<int> compute_m(const TokenAssignment& f);
  std::optional<int> compute_M(const TokenAssignment& f);

  CostValue compute_q(const TokenAssignment& f);
  CostValue cost_value(const GameState& s);

  // Optimal play with deterministic tie-breaking: among equally good options
  // the numerically smallest vertex-set mask is returned.
  VertexSet best_lister_move(const GameState& s, const Variant& var);
  VertexSet best_painter_response(const GameState& s, const Variant& var, VertexSet marked);

  std::size_t memo_size() const;
  const Graph& graph() const { return g_; }
  const SolverOptions& options() const { return opts_; }

 private:
  struct KeyHash {
    std::size_t operator()(std::uint64_t x) const {
      x += 0x9e3779b97f4a7c15ull;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
      return static_cast<std::size_t>(x ^ (x >> 31));
    }
  };

  std::uint64_t pack_tokens(const std::vector<int>& tokens) const;
  std::uint64_t normalize_pads(VertexSet colored, std::uint64_t tokens) const;
  void check_caps() const;

  bool exact_painter_wins(VertexSet colored, std::uint64_t tokens, int rounds_left);
  bool exact_escape(VertexSet colored, std::uint64_t tokens, int rounds_left, VertexSet pool,
                    VertexSet domain, VertexSet chosen);
  bool free_painter_wins(VertexSet colored, std::uint64_t tokens);
  bool free_escape(VertexSet colored, std::uint64_t tokens, VertexSet pool, VertexSet domain,
                   VertexSet chosen);
  int cost_to_kill(VertexSet colored, std::uint64_t tokens);
  int cost_worst_response(VertexSet colored, std::uint64_t tokens, VertexSet pool,
                          VertexSet domain, VertexSet chosen);

  Verdict mark_value(const GameState& s, const Variant& var, VertexSet marked);
  int mark_cost(const GameState& s, VertexSet marked);

  Graph g_;
  SolverOptions opts_;
  int n_;
  VertexSet all_;
  std::vector<VertexSet> adj_;
  std::unordered_map<std::uint64_t, bool, KeyHash> exact_memo_;
  std::unordered_map<std::uint64_t, bool, KeyHash> free_memo_;
  std::unordered_map<std::uint64_t, int, KeyHash> cost_memo_;
};

}  // namespace paint
