#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "paint/game.hpp"
#include "paint/graph.hpp"
#include "paint/solver.hpp"

namespace paint {

// ---- orientations and kernels ------------------------------------------

class Orientation {
 public:
  explicit Orientation(int n);
  int order() const { return n_; }
  void add_arc(int from, int to);
  VertexSet out(int v) const { return out_.at(v); }
  VertexSet in(int v) const { return in_.at(v); }

  // Every edge directed away from the root. Requires a tree.
  static Orientation away_from_root(const Graph& tree, int root);
  // One consistent direction around a cycle, starting at vertex 0 toward its
  // lowest-numbered neighbor.
  static Orientation directed_cycle(const Graph& cycle);

 private:
  int n_;
  std::vector<VertexSet> out_, in_;
};

// An independent set U inside `marked` such that every other marked vertex
// has an in-neighbor in U. Greedy from the sources; a fully marked directed
// cycle alternates if it is even and has no kernel if odd (nullopt).
std::optional<VertexSet> kernel_of(const Orientation& d, VertexSet marked);

// ---- strategy interfaces -------------------------------------------------

// Strategies carry per-game state; use a fresh instance for every match.
class ListerStrategy {
 public:
  virtual ~ListerStrategy() = default;
  virtual VertexSet mark(const GameState& s) = 0;
  // Called once per round after the coloring response.
  virtual void observe(const GameState& before, VertexSet marked, VertexSet chosen) {
    (void)before;
    (void)marked;
    (void)chosen;
  }
  virtual std::string name() const = 0;
};

class PainterStrategy {
 public:
  virtual ~PainterStrategy() = default;
  virtual VertexSet respond(const GameState& s, VertexSet marked) = 0;
  virtual std::string name() const = 0;
};

// ---- guaranteed-win horizons ----------------------------------------------

// Largest round count the corresponding marking plan is claimed to win.
// All are of the form floor(2 * order - 2 - lg(pad count)).
int path_attack_bound(int k);                       // path on k vertices, light ends
int tadpole_attack_bound(int m, int n);             // tail m, cycle n, light free end
int dumbbell_attack_bound(int m, int k, int n);     // cycles m and n, k-vertex joining path
int theta_attack_bound(int p, int q, int r);        // branch edge counts, best attack choice

// ---- scripted strategies --------------------------------------------------

// Marking plans (round-limited variant). Factories validate the graph shape
// and the supported round range and throw std::invalid_argument outside it.
std::unique_ptr<ListerStrategy> make_path_lister(const Graph& g, int rounds);
std::unique_ptr<ListerStrategy> make_cycle_lister(const Graph& g, int rounds);
std::unique_ptr<ListerStrategy> make_tadpole_lister(const Graph& g, const TokenAssignment& f,
                                                    int rounds);
std::unique_ptr<ListerStrategy> make_dumbbell_lister(const Graph& g, int rounds);
std::unique_ptr<ListerStrategy> make_theta_lister(const Graph& g, int rounds);
std::unique_ptr<ListerStrategy> make_k24_lister(const Graph& g, int rounds);

// Coloring plans.
std::unique_ptr<PainterStrategy> make_k2n_painter(const Graph& g);
std::unique_ptr<PainterStrategy> make_bipartite_painter(const Graph& g,
                                                        const TokenAssignment& f);
std::unique_ptr<PainterStrategy> make_kernel_painter(const Graph& g, const TokenAssignment& f);

// ---- refereed matches and transcripts ------------------------------------

struct TranscriptRound {
  int index = 0;  // 1-based
  VertexSet marked = 0;
  VertexSet chosen = 0;
};

struct Transcript {
  std::string graph6;
  std::string budgets;  // space-separated token counts
  std::string variant;  // "unbounded" | "exact:T" | "cost"
  std::vector<TranscriptRound> rounds;
  Verdict verdict = Verdict::PainterWins;

  int total_cost() const;  // sum of |marked| - 1
  std::string to_text() const;
  std::string to_json() const;
  static Transcript from_json(const std::string& text);
};

std::optional<Variant> variant_from_string(const std::string& text);

// Re-applies every recorded round under the full legality checks and returns
// the final verdict; throws if a move was illegal or the game did not finish.
Verdict replay(const Transcript& t);

// Plays one full game. A null strategy pointer means that side plays
// perfectly via the solver. Every move passes through the legality checks.
Transcript play_match(const Graph& g, const TokenAssignment& f, const Variant& var,
                      ListerStrategy* lister, PainterStrategy* painter, Solver& solver);

}  // namespace paint
