#include <stdexcept>

#include "doctest.h"
#include "paint/strategy.hpp"

using namespace paint;

namespace {

// Plays a scripted marking plan against a perfect coloring opponent and
// checks the claimed win, the replay, and the serialization round-trip.
void expect_lister_win(const Graph& g, const TokenAssignment& f, int t, ListerStrategy& strat) {
  Solver solver(g);
  auto tr = play_match(g, f, Variant::exact(t), &strat, nullptr, solver);
  CAPTURE(strat.name());
  CAPTURE(t);
  CHECK(tr.verdict == Verdict::ListerWins);
  CHECK(replay(tr) == tr.verdict);
  CHECK(Transcript::from_json(tr.to_json()).to_json() == tr.to_json());
}

void expect_painter_win(const Graph& g, const TokenAssignment& f, const Variant& var,
                        PainterStrategy& strat) {
  Solver solver(g);
  auto tr = play_match(g, f, var, nullptr, &strat, solver);
  CAPTURE(strat.name());
  CAPTURE(to_string(var));
  CHECK(tr.verdict == Verdict::PainterWins);
  CHECK(replay(tr) == tr.verdict);
}

}  // namespace

TEST_CASE("win horizons match their closed forms") {
  CHECK(path_attack_bound(2) == 1);
  CHECK(path_attack_bound(3) == 2);
  CHECK(path_attack_bound(4) == 4);
  CHECK(path_attack_bound(5) == 5);
  CHECK(path_attack_bound(8) == 11);
  CHECK(tadpole_attack_bound(1, 5) == 6);
  CHECK(tadpole_attack_bound(2, 3) == 4);
  CHECK(tadpole_attack_bound(3, 5) == 9);
  CHECK(dumbbell_attack_bound(4, 1, 4) == 9);
  CHECK(dumbbell_attack_bound(3, 1, 3) == 6);
  CHECK(dumbbell_attack_bound(3, 2, 3) == 8);
  CHECK(theta_attack_bound(3, 3, 1) == 8);
  CHECK(theta_attack_bound(1, 3, 3) == 8);
  CHECK(theta_attack_bound(2, 2, 3) == 8);
  CHECK_THROWS_AS(theta_attack_bound(2, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(path_attack_bound(1), std::invalid_argument);
}

TEST_CASE("path plan wins every round count up to its horizon") {
  for (int n : {2, 4, 5, 8}) {
    Graph g = make_path(n);
    auto f = TokenAssignment::fdoubleprime(g);
    int lo = n == 2 ? 1 : 2;
    for (int t = lo; t <= path_attack_bound(n); ++t) {
      auto strat = make_path_lister(g, t);
      expect_lister_win(g, f, t, *strat);
    }
  }
}

TEST_CASE("cycle plan wins odd rings while rounds stay within the order") {
  for (int n : {3, 5, 7}) {
    Graph g = make_cycle(n);
    auto f = TokenAssignment::uniform(g, 2);
    for (int t = 2; t <= n; ++t) {
      auto strat = make_cycle_lister(g, t);
      expect_lister_win(g, f, t, *strat);
    }
  }
}

TEST_CASE("tadpole plan wins with a pendant chain or a light ring vertex") {
  for (auto [m, n] : {std::pair{2, 3}, {2, 5}, {3, 4}}) {
    Graph g = make_tadpole(m, n);
    auto f = TokenAssignment::fstar(g);
    int lo = (n % 2 == 1) ? 2 : 3;
    for (int t = lo; t <= tadpole_attack_bound(m, n); ++t) {
      auto strat = make_tadpole_lister(g, f, t);
      expect_lister_win(g, f, t, *strat);
    }
  }
  // ring with one light vertex: the folded-away chain of length one
  Graph c5 = make_cycle(5);
  auto f5 = TokenAssignment::fprime(c5, 2);
  for (int t = 2; t <= tadpole_attack_bound(1, 5); ++t) {
    auto strat = make_tadpole_lister(c5, f5, t);
    expect_lister_win(c5, f5, t, *strat);
  }
}

TEST_CASE("tadpole plan survives relabeling") {
  Graph base = make_tadpole(2, 5);
  std::vector<int> perm{3, 0, 5, 1, 4, 2};  // scrambled labels
  Graph g(base.order());
  for (auto [a, b] : base.edges()) g.add_edge(perm[a], perm[b]);
  auto f = TokenAssignment::fstar(g);
  for (int t : {3, 6, tadpole_attack_bound(2, 5)}) {
    auto strat = make_tadpole_lister(g, f, t);
    expect_lister_win(g, f, t, *strat);
  }
}

TEST_CASE("dumbbell plan wins both the shared-vertex and bridged forms") {
  for (auto [m, k, n] : {std::tuple{3, 1, 3}, {3, 2, 3}, {4, 1, 4}}) {
    Graph g = make_dumbbell(m, k, n);
    auto f = TokenAssignment::uniform(g, 2);
    int hi = dumbbell_attack_bound(m, k, n);
    for (int t = 3; t <= hi; ++t) {
      auto strat = make_dumbbell_lister(g, t);
      expect_lister_win(g, f, t, *strat);
    }
  }
}

TEST_CASE("theta plan picks the best branch and wins through its horizon") {
  for (auto [p, q, r] : {std::tuple{1, 3, 3}, {2, 2, 3}, {2, 3, 3}}) {
    Graph g = make_theta(p, q, r);
    auto f = TokenAssignment::uniform(g, 2);
    for (int t = 4; t <= theta_attack_bound(p, q, r); ++t) {
      auto strat = make_theta_lister(g, t);
      expect_lister_win(g, f, t, *strat);
    }
  }
}

TEST_CASE("the oblivious four-round schedule beats the two-hub four-leaf graph") {
  Graph g = make_K2n(4);
  auto f = TokenAssignment::uniform(g, 2);
  auto strat = make_k24_lister(g, 4);
  expect_lister_win(g, f, 4, *strat);
}

TEST_CASE("two-hub painter survives three rounds for four or more leaves") {
  for (int n = 4; n <= 6; ++n) {
    Graph g = make_K2n(n);
    auto f = TokenAssignment::uniform(g, 2);
    auto strat = make_k2n_painter(g);
    expect_painter_win(g, f, Variant::exact(3), *strat);
  }
}

TEST_CASE("side-per-round painter survives two rounds on bipartite graphs") {
  for (const Graph& g : {make_cycle(4), make_cycle(6), make_path(5), make_K2n(3)}) {
    auto u2 = TokenAssignment::uniform(g, 2);
    auto s2 = make_bipartite_painter(g, u2);
    expect_painter_win(g, u2, Variant::exact(2), *s2);
    for (int v = 0; v < g.order(); ++v) {
      auto fp = TokenAssignment::fprime(g, v);
      auto sp = make_bipartite_painter(g, fp);
      expect_painter_win(g, fp, Variant::exact(2), *sp);
    }
  }
}

TEST_CASE("kernel painter survives trees with one light vertex in every variant") {
  Graph spider = from_edge_list("0 1\n1 2\n1 3\n3 4\n3 5\n");
  for (const Graph& g : {make_path(4), spider}) {
    for (int root = 0; root < g.order(); ++root) {
      auto f = TokenAssignment::fprime(g, root);
      std::vector<Variant> variants{Variant::unbounded(), Variant::cost(), Variant::exact(2),
                                    Variant::exact(5), Variant::exact(2 * g.order() - 1)};
      for (const auto& var : variants) {
        auto strat = make_kernel_painter(g, f);
        expect_painter_win(g, f, var, *strat);
      }
    }
  }
}

TEST_CASE("kernel painter survives rings: even always, odd beyond the order") {
  for (int n : {4, 6}) {
    Graph g = make_cycle(n);
    auto f = TokenAssignment::uniform(g, 2);
    for (Variant var : {Variant::unbounded(), Variant::exact(2), Variant::exact(n),
                        Variant::exact(n + 1), Variant::exact(2 * n)}) {
      auto strat = make_kernel_painter(g, f);
      expect_painter_win(g, f, var, *strat);
    }
  }
  for (int n : {5, 7}) {
    Graph g = make_cycle(n);
    auto f = TokenAssignment::uniform(g, 2);
    for (int t = n + 1; t <= 2 * n; ++t) {
      auto strat = make_kernel_painter(g, f);
      expect_painter_win(g, f, Variant::exact(t), *strat);
    }
  }
}

TEST_CASE("factories reject wrong shapes and round counts") {
  CHECK_THROWS_AS(make_path_lister(make_cycle(4), 2), std::invalid_argument);
  CHECK_THROWS_AS(make_path_lister(make_path(4), 5), std::invalid_argument);
  CHECK_THROWS_AS(make_path_lister(make_path(4), 1), std::invalid_argument);
  CHECK_THROWS_AS(make_cycle_lister(make_cycle(4), 2), std::invalid_argument);
  CHECK_THROWS_AS(make_cycle_lister(make_cycle(5), 6), std::invalid_argument);
  Graph c5 = make_cycle(5);
  CHECK_THROWS_AS(make_tadpole_lister(c5, TokenAssignment::uniform(c5, 2), 3),
                  std::invalid_argument);
  Graph t23 = make_tadpole(2, 3);
  CHECK_THROWS_AS(make_tadpole_lister(t23, TokenAssignment::uniform(t23, 2), 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_dumbbell_lister(make_cycle(6), 3), std::invalid_argument);
  CHECK_THROWS_AS(make_theta_lister(make_theta(2, 2, 2), 4), std::invalid_argument);
  CHECK_THROWS_AS(make_k24_lister(make_K2n(3), 4), std::invalid_argument);
  CHECK_THROWS_AS(make_k24_lister(make_K2n(4), 3), std::invalid_argument);
  CHECK_THROWS_AS(make_k2n_painter(make_cycle(5)), std::invalid_argument);
  CHECK_THROWS_AS(make_bipartite_painter(c5, TokenAssignment::uniform(c5, 2)),
                  std::invalid_argument);
  Graph c4 = make_cycle(4);
  CHECK_THROWS_AS(make_kernel_painter(c4, TokenAssignment::fprime(c4, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_kernel_painter(make_K2n(3), TokenAssignment::uniform(make_K2n(3), 2)),
                  std::invalid_argument);
}

TEST_CASE("transcripts print, serialize, and replay") {
  Graph g = make_path(2);
  auto f = TokenAssignment::uniform(g, 1);
  Solver solver(g);
  auto tr = play_match(g, f, Variant::exact(1), nullptr, nullptr, solver);
  CHECK(tr.verdict == Verdict::ListerWins);
  CHECK(tr.to_text() == "1 | V=0 1 | X=0\nverdict=ListerWins\n");
  CHECK(tr.total_cost() == 1);
  CHECK(replay(tr) == Verdict::ListerWins);

  auto back = Transcript::from_json(tr.to_json());
  CHECK(back.graph6 == tr.graph6);
  CHECK(back.budgets == "1 1");
  CHECK(back.variant == "exact:1");
  CHECK(back.rounds.size() == 1);
  CHECK(back.rounds[0].marked == (vbit(0) | vbit(1)));
  CHECK(back.verdict == Verdict::ListerWins);

  // tampered transcripts are rejected on replay
  auto bad = tr;
  bad.rounds[0].marked = vbit(0) | vbit(1) | vbit(5);
  CHECK_THROWS(replay(bad));
  auto truncated = tr;
  truncated.rounds.clear();
  CHECK_THROWS_AS(replay(truncated), std::invalid_argument);
}

TEST_CASE("the referee rejects illegal strategy moves") {
  struct BadLister : ListerStrategy {
    VertexSet mark(const GameState&) override { return vbit(0) | vbit(1) | vbit(2); }
    std::string name() const override { return "bad"; }
  };
  struct BadPainter : PainterStrategy {
    VertexSet respond(const GameState&, VertexSet marked) override { return marked; }
    std::string name() const override { return "bad"; }
  };
  Graph g = make_path(3);
  Solver solver(g);
  auto f1 = TokenAssignment::uniform(g, 1);
  BadLister bl;  // marking three unit budgets leaves nothing for the second round
  CHECK_THROWS_AS(play_match(g, f1, Variant::exact(2), &bl, nullptr, solver),
                  std::invalid_argument);
  BadPainter bp;  // coloring a dependent set is never legal
  auto f2 = TokenAssignment::uniform(g, 2);
  CHECK_THROWS_AS(play_match(g, f2, Variant::exact(2), nullptr, &bp, solver),
                  std::invalid_argument);
}

TEST_CASE("variant strings parse and reject garbage") {
  CHECK(*variant_from_string("unbounded") == Variant::unbounded());
  CHECK(*variant_from_string("cost") == Variant::cost());
  CHECK(*variant_from_string("exact:7") == Variant::exact(7));
  CHECK(!variant_from_string("exact:0").has_value());
  CHECK(!variant_from_string("exact:3x").has_value());
  CHECK(!variant_from_string("exactly").has_value());
  CHECK(!variant_from_string("").has_value());
}
