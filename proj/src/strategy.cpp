#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "paint/strategy.hpp"

namespace paint {

// ---- guaranteed-win horizons ----------------------------------------------

namespace {

int ceil_lg(int b) {  // smallest e with 2^e >= b
  if (b < 1) throw std::invalid_argument("ceil_lg needs a positive argument");
  return std::bit_width(static_cast<unsigned>(b - 1));
}

int floor_sub_lg(int a, int b) { return a - ceil_lg(b); }  // floor(a - lg b)

}  // namespace

int path_attack_bound(int k) {
  if (k < 2) throw std::invalid_argument("path attack needs at least two vertices");
  return floor_sub_lg(2 * k - 2, k);
}

int tadpole_attack_bound(int m, int n) {
  if (m < 1 || n < 3) throw std::invalid_argument("tadpole attack needs m >= 1, n >= 3");
  return floor_sub_lg(2 * (m + n) - 4, m + n / 2);
}

int dumbbell_attack_bound(int m, int k, int n) {
  if (m < 3 || n < 3 || k < 1)
    throw std::invalid_argument("dumbbell attack needs rings >= 3 and a joining path");
  int order = m + n + k - 2;
  return floor_sub_lg(2 * order - 2, k + m / 2 + n / 2);
}

int theta_attack_bound(int p, int q, int r) {
  if (p < 1 || q < 1 || r < 1) throw std::invalid_argument("branch lengths must be positive");
  int order = p + q + r - 1;
  std::array<std::array<int, 2>, 3> choices = {{{p, q + r}, {q, p + r}, {r, p + q}}};
  std::optional<int> best;
  for (auto [att, cyc] : choices) {
    if (att < 3 || cyc < 4) continue;
    int score = floor_sub_lg(2 * order - 2, att / 2 + 1 + cyc / 2);
    if (!best || score > *best) best = score;
  }
  if (!best) throw std::invalid_argument("no branch can carry the attack");
  return *best;
}

// ---- shape recovery --------------------------------------------------------

namespace {

// Follows degree-2 vertices starting at `first` (coming from `from`) and
// stops at the first vertex of another degree, which is included.
std::vector<int> chain_walk(const Graph& g, int from, int first) {
  std::vector<int> walk{first};
  int prev = from, cur = first;
  while (g.degree(cur) == 2) {
    int next = vs_lowest(g.neighbors(cur) & ~vbit(prev));
    prev = cur;
    cur = next;
    walk.push_back(cur);
  }
  return walk;
}

std::vector<int> path_order(const Graph& g) {
  if (!is_path_graph(g)) throw std::invalid_argument("not a path");
  if (g.order() == 1) return {0};
  int end = -1;
  for (int v = 0; v < g.order() && end < 0; ++v)
    if (g.degree(v) == 1) end = v;
  std::vector<int> order{end};
  auto rest = chain_walk(g, end, vs_lowest(g.neighbors(end)));
  order.insert(order.end(), rest.begin(), rest.end());
  return order;
}

std::vector<int> ring_order(const Graph& g) {
  if (!is_cycle_graph(g)) throw std::invalid_argument("not a cycle");
  std::vector<int> order{0};
  int prev = 0, cur = vs_lowest(g.neighbors(0));
  while (cur != 0) {
    order.push_back(cur);
    int next = vs_lowest(g.neighbors(cur) & ~vbit(prev));
    prev = cur;
    cur = next;
  }
  return order;
}

struct TadpoleShape {
  std::vector<int> cycle;  // junction last
  std::vector<int> tail;   // from the junction's tail neighbor out to the free end
};

std::optional<TadpoleShape> tadpole_shape(const Graph& g) {
  if (!is_connected(g)) return std::nullopt;
  int junction = -1, free_end = -1;
  for (int v = 0; v < g.order(); ++v) {
    int d = g.degree(v);
    if (d == 3) {
      if (junction >= 0) return std::nullopt;
      junction = v;
    } else if (d == 1) {
      if (free_end >= 0) return std::nullopt;
      free_end = v;
    } else if (d != 2) {
      return std::nullopt;
    }
  }
  if (junction < 0 || free_end < 0) return std::nullopt;

  TadpoleShape sh;
  auto out = chain_walk(g, free_end, vs_lowest(g.neighbors(free_end)));
  if (out.back() != junction) return std::nullopt;
  sh.tail.assign(out.rbegin() + 1, out.rend());  // drop the junction, walk outward
  sh.tail.push_back(free_end);

  VertexSet ring_nbrs = g.neighbors(junction) & ~vbit(sh.tail.front());
  sh.cycle = chain_walk(g, junction, vs_lowest(ring_nbrs));
  if (sh.cycle.back() != junction || sh.cycle.size() < 3) return std::nullopt;
  if (static_cast<int>(sh.cycle.size() + sh.tail.size()) != g.order()) return std::nullopt;
  return sh;
}

struct DumbbellShape {
  std::vector<int> ring_a, ring_b;  // each ends with its own junction
  std::vector<int> bridge;          // strictly between the junctions; may be empty
  bool shared = false;              // both rings meet in one vertex
};

std::optional<DumbbellShape> dumbbell_shape(const Graph& g) {
  if (!is_connected(g)) return std::nullopt;
  std::vector<int> deg3, deg4;
  for (int v = 0; v < g.order(); ++v) {
    int d = g.degree(v);
    if (d == 3)
      deg3.push_back(v);
    else if (d == 4)
      deg4.push_back(v);
    else if (d != 2)
      return std::nullopt;
  }

  DumbbellShape sh;
  if (deg4.size() == 1 && deg3.empty()) {
    sh.shared = true;
    int j = deg4[0];
    VertexSet nbrs = g.neighbors(j);
    sh.ring_a = chain_walk(g, j, vs_lowest(nbrs));
    if (sh.ring_a.back() != j || sh.ring_a.size() < 3) return std::nullopt;
    nbrs &= ~vbit(sh.ring_a.front());
    nbrs &= ~vbit(sh.ring_a[sh.ring_a.size() - 2]);
    sh.ring_b = chain_walk(g, j, vs_lowest(nbrs));
    if (sh.ring_b.back() != j || sh.ring_b.size() < 3) return std::nullopt;
    if (static_cast<int>(sh.ring_a.size() + sh.ring_b.size()) != g.order() + 1)
      return std::nullopt;
    return sh;
  }
  if (deg3.size() != 2 || !deg4.empty()) return std::nullopt;

  int j1 = deg3[0], j2 = deg3[1];
  std::vector<std::vector<int>> to_self, to_other;
  for (int nb : vs_to_vector(g.neighbors(j1))) {
    auto walk = chain_walk(g, j1, nb);
    if (walk.back() == j1)
      to_self.push_back(std::move(walk));
    else if (walk.back() == j2)
      to_other.push_back(std::move(walk));
    else
      return std::nullopt;
  }
  if (to_self.size() != 2 || to_other.size() != 1) return std::nullopt;
  sh.ring_a = std::move(to_self[0]);  // both walks trace the same ring; keep one
  if (sh.ring_a.size() < 3) return std::nullopt;
  sh.bridge = std::move(to_other[0]);
  sh.bridge.pop_back();  // drop j2

  VertexSet ring_b_nbrs = g.neighbors(j2);
  ring_b_nbrs &= ~vbit(sh.bridge.empty() ? j1 : sh.bridge.back());
  sh.ring_b = chain_walk(g, j2, vs_lowest(ring_b_nbrs));
  if (sh.ring_b.back() != j2 || sh.ring_b.size() < 3) return std::nullopt;
  if (static_cast<int>(sh.ring_a.size() + sh.ring_b.size() + sh.bridge.size()) != g.order())
    return std::nullopt;
  return sh;
}

struct ThetaShape {
  int u = -1, v = -1;                        // the two degree-3 vertices, u < v
  std::array<std::vector<int>, 3> internals;  // each branch's interior, ordered from u
};

std::optional<ThetaShape> theta_shape(const Graph& g) {
  if (!is_connected(g)) return std::nullopt;
  std::vector<int> hubs;
  for (int v = 0; v < g.order(); ++v) {
    int d = g.degree(v);
    if (d == 3)
      hubs.push_back(v);
    else if (d != 2)
      return std::nullopt;
  }
  if (hubs.size() != 2) return std::nullopt;

  ThetaShape sh;
  sh.u = hubs[0];
  sh.v = hubs[1];
  int i = 0, seen = 2;
  for (int nb : vs_to_vector(g.neighbors(sh.u))) {
    auto walk = chain_walk(g, sh.u, nb);
    if (walk.back() != sh.v) return std::nullopt;
    walk.pop_back();
    seen += static_cast<int>(walk.size());
    sh.internals[i++] = std::move(walk);
  }
  if (seen != g.order()) return std::nullopt;
  return sh;
}

// ---- scripted marking plans ------------------------------------------------

// Adds the forced marks of the round-limited game and falls back to a
// one-vertex filler when the plan has nothing to say this round.
class ScriptedLister : public ListerStrategy {
 public:
  ScriptedLister(Graph g, Variant var) : g_(std::move(g)), var_(var) {}

  VertexSet mark(const GameState& s) final {
    VertexSet v = decisive(s);
    if (var_.kind == Variant::Kind::Exact)
      for (int w = 0; w < g_.order(); ++w)
        if (s.tokens[w] == s.rounds_left) v |= vbit(w);
    if (!v) v = padding(s);
    return v;
  }

 protected:
  virtual VertexSet decisive(const GameState& s) = 0;
  virtual VertexSet protected_set(const GameState& s) const {
    (void)s;
    return 0;
  }
  const Graph& graph() const { return g_; }

 private:
  VertexSet padding(const GameState& s) const {
    VertexSet tokened = 0;
    for (int v = 0; v < g_.order(); ++v)
      if (s.tokens[v] > 0) tokened |= vbit(v);
    VertexSet prot = protected_set(s);
    // Spend leftovers on already-colored vertices first; never dip into the
    // live target while anything else remains.
    for (VertexSet pool : {tokened & s.colored & ~prot, tokened & ~s.colored & ~prot,
                           tokened & s.colored, tokened}) {
      if (pool) return vbit(vs_lowest(pool));
    }
    throw std::logic_error("no vertex left to mark");
  }

  Graph g_;
  Variant var_;
};

// Halving plan against a path whose two end vertices hold one token and whose
// interior holds two. Marks the middle pair, keeps the half whose freshly
// marked vertex survived uncolored, and stalls while the round horizon is too
// far out for the current piece.
struct PathCore {
  explicit PathCore(std::vector<int> t) : target(std::move(t)) {}

  std::vector<int> target;
  int pending = -1;  // index of the left split vertex while unresolved

  VertexSet bits() const { return vs_from_vector(target); }

  VertexSet decisive(const GameState& s) {
    int r = s.rounds_left;
    int k = static_cast<int>(target.size());
    if (r <= 1) return 0;  // the forced marks finish the job
    if (r == 2) {
      VertexSet v = 0;
      if (k <= 2) return 0;
      int from = (k % 2 == 0) ? 1 : 0;  // even: interior; odd: all but the far end
      for (int i = from; i + 1 < k; ++i) v |= vbit(target[i]);
      return v;
    }
    if (k >= 4 && r <= path_attack_bound(k)) {
      int h = k / 2;
      pending = h - 1;
      return vbit(target[h - 1]) | vbit(target[h]);
    }
    return 0;  // stall until the horizon matches the piece
  }

  void observe(const GameState& before, VertexSet chosen) {
    if (pending < 0) return;
    VertexSet colored = before.colored | chosen;
    std::vector<int> next;
    if (!vs_contains(colored, target[pending]))
      next.assign(target.begin(), target.begin() + pending + 1);
    else
      next.assign(target.begin() + pending + 1, target.end());
    target = std::move(next);
    pending = -1;
  }
};

// Plan against a ring with a pendant chain whose free end is light. Splits
// the ring opposite the junction, which leaves one long light-ended path.
struct TadpoleCore {
  TadpoleCore(std::vector<int> c, std::vector<int> t)
      : cycle(std::move(c)), tail(std::move(t)) {}

  std::vector<int> cycle;  // junction last
  std::vector<int> tail;   // may be empty; light free end last
  int pending = -1;
  std::optional<PathCore> path;

  int bound() const {
    return tadpole_attack_bound(static_cast<int>(tail.size()) + 1,
                                static_cast<int>(cycle.size()));
  }

  VertexSet bits() const {
    if (path) return path->bits();
    return vs_from_vector(cycle) | vs_from_vector(tail);
  }

  VertexSet decisive(const GameState& s) {
    if (path) return path->decisive(s);
    int r = s.rounds_left;
    if (r <= 1) return 0;
    if (r == 2) {
      // two-round blitz: mark everything still holding tokens
      VertexSet v = 0;
      for (int w : vs_to_vector(bits()))
        if (s.tokens[w] > 0) v |= vbit(w);
      return v;
    }
    if (r > bound()) return 0;
    int h = static_cast<int>(cycle.size()) / 2;
    pending = h - 1;
    return vbit(cycle[h - 1]) | vbit(cycle[h]);
  }

  void observe(const GameState& before, VertexSet chosen) {
    if (path) {
      path->observe(before, chosen);
      return;
    }
    if (pending < 0) return;
    VertexSet colored = before.colored | chosen;
    int n = static_cast<int>(cycle.size());
    std::vector<int> t;
    if (!vs_contains(colored, cycle[pending])) {
      for (int i = pending; i >= 0; --i) t.push_back(cycle[i]);
      t.push_back(cycle[n - 1]);
    } else {
      for (int i = pending + 1; i < n; ++i) t.push_back(cycle[i]);
    }
    t.insert(t.end(), tail.begin(), tail.end());
    path = PathCore(std::move(t));
    pending = -1;
  }
};

class PathLister : public ScriptedLister {
 public:
  PathLister(const Graph& g, int rounds)
      : ScriptedLister(g, Variant::exact(rounds)), core_(path_order(g)) {}

  void observe(const GameState& before, VertexSet, VertexSet chosen) override {
    core_.observe(before, chosen);
  }
  std::string name() const override { return "path-lister"; }

 protected:
  VertexSet decisive(const GameState& s) override { return core_.decisive(s); }
  VertexSet protected_set(const GameState&) const override { return core_.bits(); }

 private:
  PathCore core_;
};

class TadpoleLister : public ScriptedLister {
 public:
  TadpoleLister(const Graph& g, TadpoleCore core, int rounds)
      : ScriptedLister(g, Variant::exact(rounds)), core_(std::move(core)) {}

  void observe(const GameState& before, VertexSet, VertexSet chosen) override {
    core_.observe(before, chosen);
  }
  std::string name() const override { return "tadpole-lister"; }

 protected:
  VertexSet decisive(const GameState& s) override { return core_.decisive(s); }
  VertexSet protected_set(const GameState&) const override { return core_.bits(); }

 private:
  TadpoleCore core_;
};

// Odd ring, two tokens everywhere: mark the whole ring once, stall, and let
// the forced final round catch the two adjacent survivors.
class CycleLister : public ScriptedLister {
 public:
  CycleLister(const Graph& g, int rounds) : ScriptedLister(g, Variant::exact(rounds)) {}

  std::string name() const override { return "cycle-lister"; }

 protected:
  VertexSet decisive(const GameState& s) override {
    bool fresh = s.colored == 0 &&
                 std::all_of(s.tokens.begin(), s.tokens.end(), [](int t) { return t == 2; });
    return fresh ? graph().vertices() : 0;
  }
};

class DumbbellLister : public ScriptedLister {
 public:
  DumbbellLister(const Graph& g, DumbbellShape sh, int rounds)
      : ScriptedLister(g, Variant::exact(rounds)), rounds_(rounds) {
    auto ring_min = [](const std::vector<int>& ring) {
      return *std::min_element(ring.begin(), ring.end() - 1);  // junction excluded
    };
    bool a_first = ring_min(sh.ring_a) < ring_min(sh.ring_b);
    attack_ = a_first ? std::move(sh.ring_a) : std::move(sh.ring_b);
    other_ = a_first ? std::move(sh.ring_b) : std::move(sh.ring_a);
    bridge_ = std::move(sh.bridge);
    shared_ = sh.shared;
    if (!a_first) std::reverse(bridge_.begin(), bridge_.end());
  }

  void observe(const GameState& before, VertexSet, VertexSet chosen) override {
    if (tad_) {
      tad_->observe(before, chosen);
      return;
    }
    if (path_) {
      path_->observe(before, chosen);
      return;
    }
    VertexSet colored = before.colored | chosen;
    if (four_pending_) {
      four_pending_ = false;
      path_ = PathCore(three_round_path(colored));
      return;
    }
    if (pending_ >= 0) {
      bool left = !vs_contains(colored, attack_[pending_]);
      std::vector<int> tail(bridge_.rbegin(), bridge_.rend());
      if (!shared_) tail.push_back(attack_.back());
      if (left)
        for (int i = 0; i <= pending_; ++i) tail.push_back(attack_[i]);
      else
        for (int i = static_cast<int>(attack_.size()) - 2; i > pending_; --i)
          tail.push_back(attack_[i]);
      tad_ = TadpoleCore(other_, std::move(tail));
      pending_ = -1;
    }
  }

  std::string name() const override { return "dumbbell-lister"; }

 protected:
  VertexSet decisive(const GameState& s) override {
    if (tad_) return tad_->decisive(s);
    if (path_) return path_->decisive(s);
    if (opened_) return 0;
    opened_ = true;
    if (rounds_ == 3) {
      four_pending_ = true;
      return vbit(attack_[0]) | vbit(attack_[1]) | vbit(other_[0]) | vbit(other_[1]);
    }
    int h = static_cast<int>(attack_.size()) / 2;
    pending_ = h - 1;
    return vbit(attack_[h - 1]) | vbit(attack_[h]);
  }

  VertexSet protected_set(const GameState&) const override {
    if (tad_) return tad_->bits();
    if (path_) return path_->bits();
    return vs_from_vector(attack_) | vs_from_vector(other_) | vs_from_vector(bridge_);
  }

 private:
  std::vector<int> three_round_path(VertexSet colored) const {
    std::vector<int> p;
    if (!vs_contains(colored, attack_[0]))
      p.push_back(attack_[0]);
    else
      p.assign(attack_.begin() + 1, attack_.end() - 1);
    p.push_back(attack_.back());
    p.insert(p.end(), bridge_.begin(), bridge_.end());
    if (!shared_) p.push_back(other_.back());
    if (!vs_contains(colored, other_[0]))
      p.push_back(other_[0]);
    else
      for (int i = static_cast<int>(other_.size()) - 2; i >= 1; --i) p.push_back(other_[i]);
    return p;
  }

  std::vector<int> attack_, other_, bridge_;
  bool shared_ = false;
  int rounds_;
  bool opened_ = false;
  bool four_pending_ = false;
  int pending_ = -1;
  std::optional<TadpoleCore> tad_;
  std::optional<PathCore> path_;
};

class ThetaLister : public ScriptedLister {
 public:
  ThetaLister(const Graph& g, ThetaShape sh, int attack, int rounds)
      : ScriptedLister(g, Variant::exact(rounds)), sh_(std::move(sh)), attack_(attack) {}

  void observe(const GameState& before, VertexSet, VertexSet chosen) override {
    if (tad_) {
      tad_->observe(before, chosen);
      return;
    }
    if (pending_ < 0) return;
    VertexSet colored = before.colored | chosen;
    const auto& w = sh_.internals[attack_];
    int i1 = -1, i2 = -1;
    for (int i = 0; i < 3; ++i) {
      if (i == attack_) continue;
      (i1 < 0 ? i1 : i2) = i;
    }
    std::vector<int> ring, tail;
    if (!vs_contains(colored, w[pending_])) {
      tail.assign(w.begin(), w.begin() + pending_ + 1);
      ring = sh_.internals[i1];
      ring.push_back(sh_.v);
      ring.insert(ring.end(), sh_.internals[i2].rbegin(), sh_.internals[i2].rend());
      ring.push_back(sh_.u);
    } else {
      tail.assign(w.rbegin(), w.rend() - (pending_ + 1));
      ring.assign(sh_.internals[i1].rbegin(), sh_.internals[i1].rend());
      ring.push_back(sh_.u);
      ring.insert(ring.end(), sh_.internals[i2].begin(), sh_.internals[i2].end());
      ring.push_back(sh_.v);
    }
    tad_ = TadpoleCore(std::move(ring), std::move(tail));
    pending_ = -1;
  }

  std::string name() const override { return "theta-lister"; }

 protected:
  VertexSet decisive(const GameState& s) override {
    if (tad_) return tad_->decisive(s);
    if (opened_) return 0;
    opened_ = true;
    const auto& w = sh_.internals[attack_];
    int p = static_cast<int>(w.size()) + 1;
    int h = p / 2;
    pending_ = h - 1;
    return vbit(w[h - 1]) | vbit(w[h]);
  }

  VertexSet protected_set(const GameState&) const override {
    if (tad_) return tad_->bits();
    VertexSet v = vbit(sh_.u) | vbit(sh_.v);
    for (const auto& br : sh_.internals) v |= vs_from_vector(br);
    return v;
  }

 private:
  ThetaShape sh_;
  int attack_;
  bool opened_ = false;
  int pending_ = -1;
  std::optional<TadpoleCore> tad_;
};

// Oblivious four-round schedule against the complete bipartite graph with
// two hubs and four leaves, two tokens everywhere.
class K24Lister : public ScriptedLister {
 public:
  K24Lister(const Graph& g, int hub_u, int hub_v, std::array<int, 4> leaves)
      : ScriptedLister(g, Variant::exact(4)), u_(hub_u), v_(hub_v), x_(leaves) {}

  std::string name() const override { return "k24-lister"; }

 protected:
  VertexSet decisive(const GameState& s) override {
    switch (s.rounds_left) {
      case 4: return vbit(u_) | vbit(x_[0]) | vbit(x_[1]);
      case 3: return vbit(u_) | vbit(x_[2]) | vbit(x_[3]);
      case 2: return vbit(v_) | vbit(x_[0]) | vbit(x_[2]);
      case 1: return vbit(v_) | vbit(x_[1]) | vbit(x_[3]);
      default: return 0;
    }
  }

 private:
  int u_, v_;
  std::array<int, 4> x_;
};

// ---- coloring plans --------------------------------------------------------

// Hubs the moment both are up, otherwise every marked uncolored leaf (they
// are pairwise nonadjacent), otherwise a lone hub.
class K2NPainter : public PainterStrategy {
 public:
  K2NPainter(int hub_u, int hub_v, VertexSet leaves)
      : hubs_(vbit(hub_u) | vbit(hub_v)), leaves_(leaves) {}

  VertexSet respond(const GameState& s, VertexSet marked) override {
    VertexSet open = marked & ~s.colored;
    if ((open & hubs_) == hubs_) return hubs_;
    if (open & leaves_) return open & leaves_;
    if (open & hubs_) return vbit(vs_lowest(open & hubs_));
    return 0;
  }

  std::string name() const override { return "k2n-painter"; }

 private:
  VertexSet hubs_;
  VertexSet leaves_;
};

// Two-round plan on a bipartite graph: one side per round. With a designated
// light vertex, its side waits until the round that marks it.
class BipartitePainter : public PainterStrategy {
 public:
  BipartitePainter(VertexSet side_a, VertexSet side_b, int designated)
      : side_a_(side_a), side_b_(side_b), designated_(designated) {}

  VertexSet respond(const GameState& s, VertexSet marked) override {
    if (s.rounds_left == 2) {
      VertexSet side = side_a_;
      if (designated_ >= 0 && !vs_contains(marked, designated_)) side = side_b_;
      return side & marked & ~s.colored;
    }
    return marked & ~s.colored;  // only one side is still open
  }

  std::string name() const override { return "bipartite-painter"; }

 private:
  VertexSet side_a_, side_b_;
  int designated_;
};

class KernelPainter : public PainterStrategy {
 public:
  explicit KernelPainter(Orientation d) : d_(std::move(d)) {}

  VertexSet respond(const GameState& s, VertexSet marked) override {
    VertexSet open = marked & ~s.colored;
    if (!open) return 0;
    if (auto k = kernel_of(d_, open)) return *k;
    return vbit(vs_lowest(open));
  }

  std::string name() const override { return "kernel-painter"; }

 private:
  Orientation d_;
};

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

// ---- factories -------------------------------------------------------------

std::unique_ptr<ListerStrategy> make_path_lister(const Graph& g, int rounds) {
  require(is_path_graph(g) && g.order() >= 2, "path lister needs a path on >= 2 vertices");
  int lo = g.order() == 2 ? 1 : 2;
  require(rounds >= lo && rounds <= path_attack_bound(g.order()),
          "round count outside the guaranteed range");
  return std::make_unique<PathLister>(g, rounds);
}

std::unique_ptr<ListerStrategy> make_cycle_lister(const Graph& g, int rounds) {
  require(is_odd_cycle(g), "cycle lister needs an odd cycle");
  require(rounds >= 2 && rounds <= g.order(), "round count outside the guaranteed range");
  return std::make_unique<CycleLister>(g, rounds);
}

std::unique_ptr<ListerStrategy> make_tadpole_lister(const Graph& g, const TokenAssignment& f,
                                                    int rounds) {
  require(f.size() == g.order(), "budget count mismatch");
  std::vector<int> cycle, tail;
  if (is_cycle_graph(g)) {
    // tail of length one folded away: the single light vertex anchors the ring
    int light = -1;
    for (int v = 0; v < g.order(); ++v) {
      if (f[v] == 1) {
        require(light < 0, "expected exactly one light vertex");
        light = v;
      } else {
        require(f[v] == 2, "expected two tokens off the light vertex");
      }
    }
    require(light >= 0, "expected exactly one light vertex");
    cycle = ring_order(g);
    auto at = std::find(cycle.begin(), cycle.end(), light);
    std::rotate(cycle.begin(), at + 1, cycle.end());
  } else {
    auto sh = tadpole_shape(g);
    require(sh.has_value(), "tadpole lister needs a ring with one pendant chain");
    for (int v = 0; v < g.order(); ++v)
      require(f[v] == (v == sh->tail.back() ? 1 : 2),
              "expected one token on the free end and two elsewhere");
    cycle = std::move(sh->cycle);
    tail = std::move(sh->tail);
  }
  int n = static_cast<int>(cycle.size());
  int m = static_cast<int>(tail.size()) + 1;
  int lo = (n % 2 == 1) ? 2 : 3;
  require(rounds >= lo && rounds <= tadpole_attack_bound(m, n),
          "round count outside the guaranteed range");
  return std::make_unique<TadpoleLister>(g, TadpoleCore(std::move(cycle), std::move(tail)),
                                         rounds);
}

std::unique_ptr<ListerStrategy> make_dumbbell_lister(const Graph& g, int rounds) {
  auto sh = dumbbell_shape(g);
  require(sh.has_value(), "dumbbell lister needs two rings joined by a path");
  int m = static_cast<int>(sh->ring_a.size());
  int n = static_cast<int>(sh->ring_b.size());
  int k = sh->shared ? 1 : static_cast<int>(sh->bridge.size()) + 2;
  require(rounds >= 3 && rounds <= dumbbell_attack_bound(m, k, n),
          "round count outside the guaranteed range");
  return std::make_unique<DumbbellLister>(g, std::move(*sh), rounds);
}

std::unique_ptr<ListerStrategy> make_theta_lister(const Graph& g, int rounds) {
  auto sh = theta_shape(g);
  require(sh.has_value(), "theta lister needs two hubs joined by three paths");
  int order = g.order();
  int attack = -1;
  std::optional<std::pair<int, int>> best;  // (score, attack edge count)
  for (int i = 0; i < 3; ++i) {
    int att = static_cast<int>(sh->internals[i].size()) + 1;
    int cyc = 0;
    for (int j = 0; j < 3; ++j)
      if (j != i) cyc += static_cast<int>(sh->internals[j].size()) + 1;
    if (att < 3 || cyc < 4) continue;
    std::pair<int, int> cand{floor_sub_lg(2 * order - 2, att / 2 + 1 + cyc / 2), att};
    if (!best || cand > *best) {
      best = cand;
      attack = i;
    }
  }
  require(attack >= 0, "no branch can carry the attack");
  require(rounds >= 4 && rounds <= best->first, "round count outside the guaranteed range");
  return std::make_unique<ThetaLister>(g, std::move(*sh), attack, rounds);
}

std::unique_ptr<ListerStrategy> make_k24_lister(const Graph& g, int rounds) {
  int hubs[2];
  auto leaves_n = is_complete_bipartite_2n(g, hubs);
  require(leaves_n == 4, "k24 lister needs two hubs fully joined to four leaves");
  require(rounds == 4, "the schedule is four rounds long");
  std::array<int, 4> leaves{};
  int i = 0;
  for (int v : vs_to_vector(g.vertices() & ~vbit(hubs[0]) & ~vbit(hubs[1]))) leaves[i++] = v;
  return std::make_unique<K24Lister>(g, hubs[0], hubs[1], leaves);
}

std::unique_ptr<PainterStrategy> make_k2n_painter(const Graph& g) {
  int hubs[2];
  auto leaves_n = is_complete_bipartite_2n(g, hubs);
  require(leaves_n.has_value(), "k2n painter needs two hubs fully joined to the leaves");
  VertexSet leaves = g.vertices() & ~vbit(hubs[0]) & ~vbit(hubs[1]);
  return std::make_unique<K2NPainter>(hubs[0], hubs[1], leaves);
}

std::unique_ptr<PainterStrategy> make_bipartite_painter(const Graph& g,
                                                        const TokenAssignment& f) {
  require(f.size() == g.order(), "budget count mismatch");
  auto bp = bipartition(g);
  require(bp.has_value(), "bipartite painter needs a bipartite graph");
  int designated = -1;
  for (int v = 0; v < g.order(); ++v) {
    if (f[v] == 1) {
      require(designated < 0, "at most one light vertex is supported");
      designated = v;
    } else {
      require(f[v] == 2, "expected two tokens off the light vertex");
    }
  }
  int anchor = designated >= 0 ? designated : 0;
  VertexSet a = vs_contains(bp->left, anchor) ? bp->left : bp->right;
  VertexSet b = g.vertices() & ~a;
  return std::make_unique<BipartitePainter>(a, b, designated);
}

std::unique_ptr<PainterStrategy> make_kernel_painter(const Graph& g, const TokenAssignment& f) {
  require(f.size() == g.order(), "budget count mismatch");
  if (is_tree(g)) {
    int light = -1;
    for (int v = 0; v < g.order(); ++v) {
      if (f[v] == 1) {
        require(light < 0, "at most one light vertex is supported");
        light = v;
      } else {
        require(f[v] == 2, "expected two tokens off the light vertex");
      }
    }
    int root = light >= 0 ? light : 0;
    return std::make_unique<KernelPainter>(Orientation::away_from_root(g, root));
  }
  if (is_cycle_graph(g)) {
    for (int v = 0; v < g.order(); ++v)
      require(f[v] == 2, "expected two tokens everywhere on a ring");
    return std::make_unique<KernelPainter>(Orientation::directed_cycle(g));
  }
  throw std::invalid_argument("kernel painter supports trees and rings");
}

// ---- transcripts and refereed matches --------------------------------------

int Transcript::total_cost() const {
  int c = 0;
  for (const auto& r : rounds) c += vs_size(r.marked) - 1;
  return c;
}

std::string Transcript::to_text() const {
  std::ostringstream os;
  for (const auto& r : rounds)
    os << r.index << " | V=" << vs_to_string(r.marked) << " | X=" << vs_to_string(r.chosen)
       << "\n";
  os << "verdict=" << to_string(verdict) << "\n";
  return os.str();
}

std::string Transcript::to_json() const {
  nlohmann::json j;
  j["graph6"] = graph6;
  j["f"] = budgets;
  j["variant"] = variant;
  j["rounds"] = nlohmann::json::array();
  for (const auto& r : rounds)
    j["rounds"].push_back(
        {{"i", r.index}, {"V", vs_to_vector(r.marked)}, {"X", vs_to_vector(r.chosen)}});
  j["verdict"] = to_string(verdict);
  return j.dump();
}

Transcript Transcript::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Transcript t;
  t.graph6 = j.at("graph6").get<std::string>();
  t.budgets = j.at("f").get<std::string>();
  t.variant = j.at("variant").get<std::string>();
  for (const auto& r : j.at("rounds")) {
    TranscriptRound round;
    round.index = r.at("i").get<int>();
    round.marked = vs_from_vector(r.at("V").get<std::vector<int>>());
    round.chosen = vs_from_vector(r.at("X").get<std::vector<int>>());
    t.rounds.push_back(round);
  }
  std::string v = j.at("verdict").get<std::string>();
  if (v == to_string(Verdict::PainterWins))
    t.verdict = Verdict::PainterWins;
  else if (v == to_string(Verdict::ListerWins))
    t.verdict = Verdict::ListerWins;
  else
    throw std::invalid_argument("unknown verdict: " + v);
  return t;
}

std::optional<Variant> variant_from_string(const std::string& text) {
  if (text == "unbounded") return Variant::unbounded();
  if (text == "cost") return Variant::cost();
  if (text.rfind("exact:", 0) == 0) {
    try {
      size_t used = 0;
      int t = std::stoi(text.substr(6), &used);
      if (used != text.size() - 6) return std::nullopt;
      return Variant::exact(t);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Verdict replay(const Transcript& t) {
  Graph g = from_graph6(t.graph6);
  std::vector<int> values;
  std::istringstream is(t.budgets);
  for (int x; is >> x;) values.push_back(x);
  TokenAssignment f = TokenAssignment::from_values(std::move(values));
  auto var = variant_from_string(t.variant);
  if (!var) throw std::invalid_argument("unknown variant: " + t.variant);

  GameState s = initial_state(g, f, *var);
  for (const auto& r : t.rounds) {
    if (terminal_verdict(g, s, *var))
      throw std::invalid_argument("transcript continues past the end of the game");
    s = apply_round(g, s, *var, r.marked, r.chosen);
  }
  if (auto v = terminal_verdict(g, s, *var)) return *v;
  if (lister_moves(g, s, *var).empty()) return Verdict::PainterWins;
  throw std::invalid_argument("transcript stops before the game ends");
}

Transcript play_match(const Graph& g, const TokenAssignment& f, const Variant& var,
                      ListerStrategy* lister, PainterStrategy* painter, Solver& solver) {
  Transcript t;
  t.graph6 = to_graph6(g);
  t.budgets = f.to_string();
  t.variant = to_string(var);

  GameState s = initial_state(g, f, var);
  int i = 0;
  while (true) {
    if (auto v = terminal_verdict(g, s, var)) {
      t.verdict = *v;
      break;
    }
    VertexSet marked;
    if (lister) {
      marked = lister->mark(s);
    } else {
      if (lister_moves(g, s, var).empty()) {
        t.verdict = Verdict::PainterWins;  // no legal marking at all
        break;
      }
      marked = solver.best_lister_move(s, var);
    }
    VertexSet chosen =
        painter ? painter->respond(s, marked) : solver.best_painter_response(s, var, marked);
    GameState next = apply_round(g, s, var, marked, chosen);
    t.rounds.push_back({++i, marked, chosen});
    if (lister) lister->observe(s, marked, chosen);
    s = std::move(next);
    if (i > 4096) throw std::runtime_error("match did not terminate");
  }
  return t;
}

}  // namespace paint
