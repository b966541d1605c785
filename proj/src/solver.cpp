#include "paint/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace paint {

namespace {

constexpr int kInfCost = 1 << 20;

inline int tok(std::uint64_t tokens, int v) { return static_cast<int>((tokens >> (3 * v)) & 7); }

inline std::uint64_t spread3(VertexSet s) {
  std::uint64_t m = 0;
  for (VertexSet x = s; x; x &= x - 1) m |= 7ull << (3 * vs_lowest(x));
  return m;
}

inline std::uint64_t decrement_all(std::uint64_t tokens, VertexSet marked) {
  for (VertexSet x = marked; x; x &= x - 1) tokens -= 1ull << (3 * vs_lowest(x));
  return tokens;
}

}  // namespace

Solver::Solver(const Graph& g, SolverOptions opts) : g_(g), opts_(opts), n_(g.order()) {
  if (opts_.max_n < 1 || opts_.max_n > 14)
    throw std::invalid_argument("solver supports max_n between 1 and 14");
  if (n_ > opts_.max_n)
    throw std::invalid_argument("graph order " + std::to_string(n_) +
                                " exceeds the solver cap of " + std::to_string(opts_.max_n));
  all_ = g.vertices();
  adj_.resize(n_);
  for (int v = 0; v < n_; ++v) adj_[v] = g.neighbors(v);
}

std::uint64_t Solver::pack_tokens(const std::vector<int>& tokens) const {
  if (static_cast<int>(tokens.size()) != n_)
    throw std::invalid_argument("token vector size does not match graph order");
  std::uint64_t packed = 0;
  for (int v = 0; v < n_; ++v) {
    if (tokens[v] < 0 || tokens[v] > 7)
      throw std::invalid_argument("solver supports token budgets between 0 and 7");
    packed |= static_cast<std::uint64_t>(tokens[v]) << (3 * v);
  }
  return packed;
}

// Colored vertices are interchangeable: their leftover tokens only pad the
// schedule. Sorting those fields canonicalizes equivalent states.
std::uint64_t Solver::normalize_pads(VertexSet colored, std::uint64_t tokens) const {
  int vals[14];
  int count = 0;
  for (VertexSet m = colored; m; m &= m - 1) vals[count++] = tok(tokens, vs_lowest(m));
  if (count < 2) return tokens;
  std::sort(vals, vals + count);
  int i = 0;
  for (VertexSet m = colored; m; m &= m - 1) {
    const int v = vs_lowest(m);
    tokens = (tokens & ~(7ull << (3 * v))) | (static_cast<std::uint64_t>(vals[i++]) << (3 * v));
  }
  return tokens;
}

void Solver::check_caps() const {
  if (exact_memo_.size() + free_memo_.size() + cost_memo_.size() > opts_.memo_cap)
    throw std::runtime_error("solver state budget exceeded (memo_cap)");
}

std::size_t Solver::memo_size() const {
  return exact_memo_.size() + free_memo_.size() + cost_memo_.size();
}

// ---- round-limited game ------------------------------------------------

bool Solver::exact_painter_wins(VertexSet colored, std::uint64_t tokens, int rounds_left) {
  const VertexSet uncolored = all_ & ~colored;
  for (VertexSet m = uncolored; m; m &= m - 1)
    if (tok(tokens, vs_lowest(m)) == 0) return false;  // dead vertex
  if (!uncolored) return true;
  if (rounds_left == 0) return true;

  tokens = normalize_pads(colored, tokens);
  const std::uint64_t key = tokens | (static_cast<std::uint64_t>(colored) << (3 * n_)) |
                            (static_cast<std::uint64_t>(rounds_left) << (4 * n_));
  if (auto it = exact_memo_.find(key); it != exact_memo_.end()) return it->second;

  VertexSet markable = 0, mandatory = 0;
  int sum = 0;
  bool movable = true;
  for (int v = 0; v < n_; ++v) {
    const int t = tok(tokens, v);
    sum += t;
    if (t > 0) markable |= vbit(v);
    if (t > rounds_left) movable = false;  // this vertex can no longer be scheduled
    if (t == rounds_left) mandatory |= vbit(v);
  }
  if (sum < rounds_left) movable = false;  // some later round would go empty
  bool lister_wins = false;
  if (movable) {
    const int cap = sum - rounds_left + 1;
    auto wins_with = [&](VertexSet mv) {
      const std::uint64_t after = decrement_all(tokens, mv);
      const VertexSet domain = mv & uncolored;
      return !exact_escape(colored, after, rounds_left - 1, domain, domain, 0);
    };
    // marking everything drains fastest, so try it before the sweep
    if (vs_size(markable) <= cap && wins_with(markable)) lister_wins = true;
    const VertexSet optional_set = markable & ~mandatory;
    for (VertexSet extra = 0; !lister_wins;) {
      const VertexSet mv = mandatory | extra;
      if (mv && mv != markable && vs_size(mv) <= cap && wins_with(mv)) lister_wins = true;
      if (extra == optional_set) break;
      extra = (extra - optional_set) & optional_set;
    }
  }
  exact_memo_.emplace(key, !lister_wins);
  check_caps();
  return !lister_wins;
}

bool Solver::exact_escape(VertexSet colored, std::uint64_t tokens, int rounds_left,
                          VertexSet pool, VertexSet domain, VertexSet chosen) {
  if (!pool) {
    if (opts_.maximal_responses)
      for (VertexSet m = domain & ~chosen; m; m &= m - 1)
        if (!(adj_[vs_lowest(m)] & chosen)) return false;  // extendable: skip this response
    return exact_painter_wins(colored | chosen, tokens, rounds_left);
  }
  const int v = vs_lowest(pool);
  return exact_escape(colored, tokens, rounds_left, pool & ~vbit(v) & ~adj_[v], domain,
                      chosen | vbit(v)) ||
         exact_escape(colored, tokens, rounds_left, pool & ~vbit(v), domain, chosen);
}

// ---- round-unlimited game ------------------------------------------------

bool Solver::free_painter_wins(VertexSet colored, std::uint64_t tokens) {
  tokens &= ~spread3(colored);  // colored vertices' leftovers are irrelevant here
  const VertexSet uncolored = all_ & ~colored;
  VertexSet markable = 0;
  for (VertexSet m = uncolored; m; m &= m - 1) {
    const int v = vs_lowest(m);
    if (tok(tokens, v) == 0) return false;  // dead vertex
    markable |= vbit(v);
  }
  if (!uncolored) return true;

  const std::uint64_t key = tokens | (static_cast<std::uint64_t>(colored) << (3 * n_));
  if (auto it = free_memo_.find(key); it != free_memo_.end()) return it->second;

  auto wins_with = [&](VertexSet mv) {
    const std::uint64_t after = decrement_all(tokens, mv);
    return !free_escape(colored, after, mv, mv, 0);
  };
  bool lister_wins = wins_with(markable);
  for (VertexSet mv = markable & (0 - markable); !lister_wins;) {
    if (mv != markable && wins_with(mv)) lister_wins = true;
    if (mv == markable) break;
    mv = (mv - markable) & markable;
  }
  free_memo_.emplace(key, !lister_wins);
  check_caps();
  return !lister_wins;
}

bool Solver::free_escape(VertexSet colored, std::uint64_t tokens, VertexSet pool,
                         VertexSet domain, VertexSet chosen) {
  if (!pool) {
    if (opts_.maximal_responses)
      for (VertexSet m = domain & ~chosen; m; m &= m - 1)
        if (!(adj_[vs_lowest(m)] & chosen)) return false;
    return free_painter_wins(colored | chosen, tokens);
  }
  const int v = vs_lowest(pool);
  return free_escape(colored, tokens, pool & ~vbit(v) & ~adj_[v], domain, chosen | vbit(v)) ||
         free_escape(colored, tokens, pool & ~vbit(v), domain, chosen);
}

// ---- cost game -------------------------------------------------------------

int Solver::cost_to_kill(VertexSet colored, std::uint64_t tokens) {
  tokens &= ~spread3(colored);
  const VertexSet uncolored = all_ & ~colored;
  VertexSet markable = 0;
  for (VertexSet m = uncolored; m; m &= m - 1) {
    const int v = vs_lowest(m);
    if (tok(tokens, v) == 0) return 0;  // already dead, nothing more to pay
    markable |= vbit(v);
  }
  if (!uncolored) return kInfCost;

  const std::uint64_t key = tokens | (static_cast<std::uint64_t>(colored) << (3 * n_));
  if (auto it = cost_memo_.find(key); it != cost_memo_.end()) return it->second;

  int best = kInfCost;
  for (VertexSet mv = markable & (0 - markable);;) {
    const int base = vs_size(mv) - 1;
    if (base < best) {
      const std::uint64_t after = decrement_all(tokens, mv);
      const int worst = cost_worst_response(colored, after, mv, mv, 0);
      if (worst < kInfCost) best = std::min(best, base + worst);
    }
    if (mv == markable) break;
    mv = (mv - markable) & markable;
  }
  cost_memo_.emplace(key, best);
  check_caps();
  return best;
}

int Solver::cost_worst_response(VertexSet colored, std::uint64_t tokens, VertexSet pool,
                                VertexSet domain, VertexSet chosen) {
  if (!pool) {
    if (opts_.maximal_responses)
      for (VertexSet m = domain & ~chosen; m; m &= m - 1)
        if (!(adj_[vs_lowest(m)] & chosen)) return -1;  // extendable: not considered
    return cost_to_kill(colored | chosen, tokens);
  }
  const int v = vs_lowest(pool);
  const int with = cost_worst_response(colored, tokens, pool & ~vbit(v) & ~adj_[v], domain,
                                       chosen | vbit(v));
  if (with >= kInfCost) return with;  // surviving response found; no need to look further
  return std::max(with,
                  cost_worst_response(colored, tokens, pool & ~vbit(v), domain, chosen));
}

// ---- public interface --------------------------------------------------

Verdict Solver::value(const GameState& s, const Variant& var) {
  const std::uint64_t tokens = pack_tokens(s.tokens);
  if (auto tv = terminal_verdict(g_, s, var)) return *tv;
  switch (var.kind) {
    case Variant::Kind::Unbounded:
      return free_painter_wins(s.colored, tokens) ? Verdict::PainterWins : Verdict::ListerWins;
    case Variant::Kind::Exact: {
      if (s.rounds_left < 0) throw std::invalid_argument("exact variant needs rounds_left >= 0");
      int sum = 0;
      for (int t : s.tokens) sum += t;
      if (s.rounds_left > sum) return Verdict::PainterWins;  // schedule infeasible outright
      return exact_painter_wins(s.colored, tokens, s.rounds_left) ? Verdict::PainterWins
                                                                  : Verdict::ListerWins;
    }
    case Variant::Kind::Cost:
      return cost_to_kill(s.colored, tokens) >= kInfCost ? Verdict::PainterWins
                                                         : Verdict::ListerWins;
  }
  throw std::logic_error("unknown variant");
}

Verdict Solver::solve(const TokenAssignment& f, const Variant& var) {
  return value(initial_state(g_, f, var), var);
}

std::optional<int> Solver::compute_m(const TokenAssignment& f) {
  for (int t = std::max(1, f.max()); t <= f.sum(); ++t)
    if (solve(f, Variant::exact(t)) == Verdict::ListerWins) return t;
  return std::nullopt;
}

std::optional<int> Solver::compute_M(const TokenAssignment& f) {
  for (int t = f.sum(); t >= std::max(1, f.max()); --t)
    if (solve(f, Variant::exact(t)) == Verdict::ListerWins) return t;
  return std::nullopt;
}

CostValue Solver::cost_value(const GameState& s) {
  const int c = cost_to_kill(s.colored, pack_tokens(s.tokens));
  if (c >= kInfCost) return std::nullopt;
  return c;
}

CostValue Solver::compute_q(const TokenAssignment& f) {
  return cost_value(initial_state(g_, f, Variant::cost()));
}

Verdict Solver::mark_value(const GameState& s, const Variant& var, VertexSet marked) {
  for (VertexSet x : painter_responses(g_, s, marked, opts_.maximal_responses))
    if (value(apply_round(g_, s, var, marked, x), var) == Verdict::PainterWins)
      return Verdict::PainterWins;
  return Verdict::ListerWins;
}

int Solver::mark_cost(const GameState& s, VertexSet marked) {
  int worst = 0;
  for (VertexSet x : painter_responses(g_, s, marked, opts_.maximal_responses)) {
    GameState next = apply_round(g_, s, Variant::cost(), marked, x);
    const int c = cost_to_kill(next.colored, pack_tokens(next.tokens));
    worst = std::max(worst, c);
    if (worst >= kInfCost) break;
  }
  if (worst >= kInfCost) return kInfCost;
  return vs_size(marked) - 1 + worst;
}

VertexSet Solver::best_lister_move(const GameState& s, const Variant& var) {
  const auto moves = lister_moves(g_, s, var);
  if (moves.empty()) throw std::logic_error("no legal marking from this position");
  if (var.kind == Variant::Kind::Cost) {
    VertexSet best_move = moves.front();
    int best = kInfCost + 1;
    for (VertexSet mv : moves) {
      const int c = mark_cost(s, mv);
      if (c < best) {
        best = c;
        best_move = mv;
      }
    }
    return best_move;
  }
  const Verdict target = value(s, var);
  for (VertexSet mv : moves)
    if (mark_value(s, var, mv) == target) return mv;
  return moves.front();  // unreachable: some move always realizes the value
}

VertexSet Solver::best_painter_response(const GameState& s, const Variant& var,
                                        VertexSet marked) {
  const auto responses = painter_responses(g_, s, marked, opts_.maximal_responses);
  if (var.kind == Variant::Kind::Cost) {
    int best = -1;
    VertexSet best_resp = responses.front();
    for (VertexSet x : responses) {
      GameState next = apply_round(g_, s, var, marked, x);
      const int c = cost_to_kill(next.colored, pack_tokens(next.tokens));
      if (c > best) {
        best = c;
        best_resp = x;
      }
      if (best >= kInfCost) break;
    }
    return best_resp;
  }
  const Verdict target = mark_value(s, var, marked);
  for (VertexSet x : responses)
    if (value(apply_round(g_, s, var, marked, x), var) == target) return x;
  return responses.front();  // unreachable
}

}  // namespace paint
