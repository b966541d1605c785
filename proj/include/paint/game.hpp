#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paint/graph.hpp"

namespace paint {

enum class Verdict { PainterWins, ListerWins };

std::string to_string(Verdict v);

// Per-vertex budgets: how many times a vertex may still be marked before it
// must have been colored. A marked-out uncolored vertex loses the game for
// the coloring side.
class TokenAssignment {
 public:
  static TokenAssignment uniform(const Graph& g, int k);
  static TokenAssignment from_values(std::vector<int> values);
  // designated vertex gets 1 token, every other vertex 2
  static TokenAssignment fprime(const Graph& g, int designated);
  // the unique degree-1 vertex gets 1 token, every other vertex 2;
  // throws unless exactly one vertex has degree 1
  static TokenAssignment fstar(const Graph& g);
  // endpoints of a path get 1 token, interior vertices 2; requires a path
  static TokenAssignment fdoubleprime(const Graph& g);

  int operator[](int v) const { return values_.at(v); }
  int size() const { return static_cast<int>(values_.size()); }
  int sum() const;
  int max() const;
  const std::vector<int>& values() const { return values_; }
  std::string to_string() const;  // space-separated values

  bool operator==(const TokenAssignment&) const = default;

 private:
  explicit TokenAssignment(std::vector<int> values);
  std::vector<int> values_;
};

struct Variant {
  enum class Kind { Unbounded, Exact, Cost };
  Kind kind = Kind::Unbounded;
  int rounds = -1;  // Exact only

  static Variant unbounded() { return {Kind::Unbounded, -1}; }
  static Variant exact(int t);
  static Variant cost() { return {Kind::Cost, -1}; }

  bool operator==(const Variant&) const = default;
};

std::string to_string(const Variant& var);

struct GameState {
  VertexSet colored = 0;
  std::vector<int> tokens;
  int rounds_left = -1;  // Exact only

  bool operator==(const GameState&) const = default;
};

// Can `rounds` more rounds, each marking a nonempty set with no vertex twice
// in a round, spend every remaining token exactly?
bool schedule_feasible(const std::vector<int>& tokens, int rounds);

GameState initial_state(const Graph& g, const TokenAssignment& f, const Variant& var);

// Vertices the marking side may include this round. In the exact variant
// already-colored vertices still carrying tokens remain markable (their
// remaining marks must be spent somewhere in the schedule).
VertexSet markable_vertices(const Graph& g, const GameState& s, const Variant& var);

// Uncolored vertices with no tokens left: their presence decides the game.
VertexSet dead_vertices(const Graph& g, const GameState& s);

// Checked in order: a dead vertex loses for the coloring side; a fully
// colored graph wins for it; in the exact variant an exhausted schedule also
// wins for it. Returns nullopt mid-game.
std::optional<Verdict> terminal_verdict(const Graph& g, const GameState& s, const Variant& var);

bool lister_move_legal(const Graph& g, const GameState& s, const Variant& var, VertexSet marked);
// chosen must be an independent subset of the uncolored marked vertices
bool painter_response_legal(const Graph& g, const GameState& s, VertexSet marked, VertexSet chosen);

// Every legal marking, ascending as bit masks. Empty only when no legal move
// exists (an infeasible exact schedule), which counts as a coloring-side win.
std::vector<VertexSet> lister_moves(const Graph& g, const GameState& s, const Variant& var);

// Every legal coloring response to `marked`, ascending as bit masks.
// With maximal_only, only responses not extendable within the marked
// uncolored set are kept (never worse for the coloring side).
std::vector<VertexSet> painter_responses(const Graph& g, const GameState& s, VertexSet marked,
                                         bool maximal_only);

// One full round; throws std::invalid_argument on an illegal move or response.
GameState apply_round(const Graph& g, const GameState& s, const Variant& var, VertexSet marked,
                      VertexSet chosen);

}  // namespace paint
