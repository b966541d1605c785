#include "paint/game.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace paint {

std::string to_string(Verdict v) {
  return v == Verdict::PainterWins ? "PainterWins" : "ListerWins";
}

TokenAssignment::TokenAssignment(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty() || values_.size() > static_cast<std::size_t>(kMaxVertices))
    throw std::invalid_argument("token assignment must cover 1..30 vertices");
  for (int t : values_)
    if (t < 0) throw std::invalid_argument("token counts must be nonnegative");
}

TokenAssignment TokenAssignment::uniform(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("uniform token count must be >= 1");
  return TokenAssignment(std::vector<int>(g.order(), k));
}

TokenAssignment TokenAssignment::from_values(std::vector<int> values) {
  return TokenAssignment(std::move(values));
}

TokenAssignment TokenAssignment::fprime(const Graph& g, int designated) {
  if (designated < 0 || designated >= g.order())
    throw std::invalid_argument("designated vertex out of range");
  std::vector<int> v(g.order(), 2);
  v[designated] = 1;
  return TokenAssignment(std::move(v));
}

TokenAssignment TokenAssignment::fstar(const Graph& g) {
  int leaf = -1;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 1) continue;
    if (leaf >= 0) throw std::invalid_argument("graph has more than one degree-1 vertex");
    leaf = v;
  }
  if (leaf < 0) throw std::invalid_argument("graph has no degree-1 vertex");
  return fprime(g, leaf);
}

TokenAssignment TokenAssignment::fdoubleprime(const Graph& g) {
  if (!is_path_graph(g)) throw std::invalid_argument("endpoint budgets require a path");
  std::vector<int> v(g.order(), 2);
  for (int u = 0; u < g.order(); ++u)
    if (g.degree(u) <= 1) v[u] = 1;
  return TokenAssignment(std::move(v));
}

int TokenAssignment::sum() const { return std::accumulate(values_.begin(), values_.end(), 0); }

int TokenAssignment::max() const { return *std::max_element(values_.begin(), values_.end()); }

std::string TokenAssignment::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) os << ' ';
    os << values_[i];
  }
  return os.str();
}

Variant Variant::exact(int t) {
  if (t < 1) throw std::invalid_argument("round count must be >= 1");
  return {Kind::Exact, t};
}

std::string to_string(const Variant& var) {
  switch (var.kind) {
    case Variant::Kind::Unbounded: return "unbounded";
    case Variant::Kind::Exact: return "exact:" + std::to_string(var.rounds);
    case Variant::Kind::Cost: return "cost";
  }
  return "?";
}

bool schedule_feasible(const std::vector<int>& tokens, int rounds) {
  if (rounds < 0) return false;
  int sum = 0, max = 0;
  for (int t : tokens) {
    sum += t;
    max = std::max(max, t);
  }
  // Each round spends between 1 and n tokens, no vertex twice per round:
  // possible exactly when there are enough tokens to keep every round
  // nonempty and no single vertex needs more rounds than remain.
  return sum >= rounds && max <= rounds;
}

GameState initial_state(const Graph& g, const TokenAssignment& f, const Variant& var) {
  if (f.size() != g.order())
    throw std::invalid_argument("token assignment size does not match graph order");
  GameState s;
  s.tokens = f.values();
  s.rounds_left = var.kind == Variant::Kind::Exact ? var.rounds : -1;
  return s;
}

VertexSet markable_vertices(const Graph& g, const GameState& s, const Variant& var) {
  VertexSet out = 0;
  for (int v = 0; v < g.order(); ++v)
    if (s.tokens[v] > 0) out |= vbit(v);
  if (var.kind != Variant::Kind::Exact) out &= ~s.colored;
  return out;
}

VertexSet dead_vertices(const Graph& g, const GameState& s) {
  VertexSet out = 0;
  for (int v = 0; v < g.order(); ++v)
    if (!vs_contains(s.colored, v) && s.tokens[v] == 0) out |= vbit(v);
  return out;
}

std::optional<Verdict> terminal_verdict(const Graph& g, const GameState& s, const Variant& var) {
  if (dead_vertices(g, s)) return Verdict::ListerWins;
  if (s.colored == g.vertices()) return Verdict::PainterWins;
  if (var.kind == Variant::Kind::Exact && s.rounds_left == 0) return Verdict::PainterWins;
  return std::nullopt;
}

bool lister_move_legal(const Graph& g, const GameState& s, const Variant& var, VertexSet marked) {
  if (!marked || (marked & ~markable_vertices(g, s, var))) return false;
  if (var.kind != Variant::Kind::Exact) return true;
  if (s.rounds_left < 1) return false;
  std::vector<int> after = s.tokens;
  for (VertexSet m = marked; m; m &= m - 1) --after[vs_lowest(m)];
  return schedule_feasible(after, s.rounds_left - 1);
}

bool painter_response_legal(const Graph& g, const GameState& s, VertexSet marked,
                            VertexSet chosen) {
  if (chosen & ~(marked & ~s.colored)) return false;
  for (VertexSet m = chosen; m; m &= m - 1)
    if (g.neighbors(vs_lowest(m)) & chosen) return false;
  return true;
}

std::vector<VertexSet> lister_moves(const Graph& g, const GameState& s, const Variant& var) {
  std::vector<VertexSet> out;
  const VertexSet markable = markable_vertices(g, s, var);
  if (var.kind != Variant::Kind::Exact) {
    for (VertexSet v = markable & (0 - markable); v; v = (v - markable) & markable) {
      out.push_back(v);
      if (v == markable) break;
    }
    return out;
  }
  if (s.rounds_left < 1) return out;
  // Every vertex whose tokens equal the remaining rounds must be marked now,
  // and the marking may not spend so much that later rounds go empty.
  VertexSet mandatory = 0;
  int sum = 0;
  for (int v = 0; v < g.order(); ++v) {
    sum += s.tokens[v];
    if (s.tokens[v] > s.rounds_left) return out;  // schedule already infeasible
    if (s.tokens[v] == s.rounds_left) mandatory |= vbit(v);
  }
  if (sum < s.rounds_left) return out;  // some later round would go empty
  const VertexSet optional = markable & ~mandatory;
  const int size_cap = sum - s.rounds_left + 1;
  for (VertexSet extra = 0;;) {
    const VertexSet move = mandatory | extra;
    if (move && vs_size(move) <= size_cap) out.push_back(move);
    if (extra == optional) break;
    extra = (extra - optional) & optional;
  }
  return out;
}

namespace {

void collect_independent(const Graph& g, VertexSet pool, VertexSet chosen, VertexSet domain,
                         bool maximal_only, std::vector<VertexSet>& out) {
  if (!pool) {
    if (maximal_only)
      for (VertexSet m = domain & ~chosen; m; m &= m - 1)
        if (!(g.neighbors(vs_lowest(m)) & chosen)) return;  // extendable
    out.push_back(chosen);
    return;
  }
  const int v = vs_lowest(pool);
  collect_independent(g, pool & ~vbit(v) & ~g.neighbors(v), chosen | vbit(v), domain,
                      maximal_only, out);
  collect_independent(g, pool & ~vbit(v), chosen, domain, maximal_only, out);
}

}  // namespace

std::vector<VertexSet> painter_responses(const Graph& g, const GameState& s, VertexSet marked,
                                         bool maximal_only) {
  const VertexSet domain = marked & ~s.colored;
  std::vector<VertexSet> out;
  collect_independent(g, domain, 0, domain, maximal_only, out);
  std::sort(out.begin(), out.end());
  return out;
}

GameState apply_round(const Graph& g, const GameState& s, const Variant& var, VertexSet marked,
                      VertexSet chosen) {
  if (!lister_move_legal(g, s, var, marked))
    throw std::invalid_argument("illegal marking: " + vs_to_string(marked));
  if (!painter_response_legal(g, s, marked, chosen))
    throw std::invalid_argument("illegal coloring response: " + vs_to_string(chosen));
  GameState next = s;
  for (VertexSet m = marked; m; m &= m - 1) --next.tokens[vs_lowest(m)];
  next.colored |= chosen;
  if (var.kind == Variant::Kind::Exact) --next.rounds_left;
  return next;
}

}  // namespace paint
