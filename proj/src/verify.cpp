#include "paint/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "paint/canon.hpp"
#include "paint/classify.hpp"
#include "paint/game.hpp"
#include "paint/graph.hpp"
#include "paint/solver.hpp"
#include "paint/strategy.hpp"
#include "parallel.hpp"

namespace paint {

namespace {

// Thread-safe accumulator the suites report into.
class Sink {
 public:
  void expect(bool ok, const std::string& what) {
    std::lock_guard<std::mutex> lock(mutex_);
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  void tally(int passed_checks) {
    std::lock_guard<std::mutex> lock(mutex_);
    checks_ += passed_checks;
  }
  void drain(SuiteResult& out) {
    out.checks = checks_;
    out.failures = std::move(failures_);
  }

 private:
  std::mutex mutex_;
  int checks_ = 0;
  std::vector<std::string> failures_;
};

std::vector<Graph> universe_up_to(int n_max) {
  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n) {
    for (Graph& g : enumerate_connected_graphs(n)) out.push_back(std::move(g));
  }
  return out;
}

// Universe size for a suite whose full run uses `dflt`.
int clamp_n(const SuiteOptions& opts, int dflt) {
  return opts.n_max ? std::min(*opts.n_max, dflt) : dflt;
}

std::string tag(const Graph& g) { return to_graph6(g); }

void absorb(Sink& sink, const CrossReport& report) {
  sink.tally(report.instances - static_cast<int>(report.mismatches.size()));
  for (const CrossRecord& rec : report.mismatches) {
    sink.expect(false, rec.graph6 + ": classifier said " + rec.classifier +
                           ", solver said " + rec.solver);
  }
}

// ---- odd cycles lose exactly the round counts 2..n --------------------------

void suite_cycle_intervals(const SuiteOptions& opts, Sink& sink) {
  const int cap = clamp_n(opts, 7);
  std::vector<int> lengths;
  for (int n : {3, 5, 7}) {
    if (n <= cap) lengths.push_back(n);
  }
  parallel_for_index(static_cast<int>(lengths.size()), opts.workers, [&](int i) {
    const int n = lengths[i];
    Graph g = make_cycle(n);
    TokenAssignment f = TokenAssignment::uniform(g, 2);
    Solver solver(g);
    for (int t = 2; t <= 2 * n; ++t) {
      bool marking_wins = solver.solve(f, Variant::exact(t)) == Verdict::ListerWins;
      sink.expect(marking_wins == (t <= n),
                  "C_" + std::to_string(n) + " with " + std::to_string(t) +
                      " rounds: marking side should " +
                      (t <= n ? "win" : "lose"));
    }
  });
}

// ---- closed-form schedule feasibility against brute force -------------------

bool reference_feasible(std::vector<int> tokens, int rounds,
                        std::map<std::pair<std::vector<int>, int>, bool>& memo) {
  std::sort(tokens.begin(), tokens.end());
  if (rounds == 0) {
    return std::all_of(tokens.begin(), tokens.end(), [](int t) { return t == 0; });
  }
  auto key = std::make_pair(tokens, rounds);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  VertexSet positive = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] > 0) positive |= vbit(static_cast<int>(i));
  }
  bool ok = false;
  for (VertexSet s = positive; s != 0 && !ok; s = (s - 1) & positive) {
    std::vector<int> next = tokens;
    for (int v : vs_to_vector(s)) --next[v];
    ok = reference_feasible(std::move(next), rounds - 1, memo);
  }
  memo[key] = ok;
  return ok;
}

void suite_feasibility_oracle(const SuiteOptions& opts, Sink& sink) {
  (void)opts;
  std::map<std::pair<std::vector<int>, int>, bool> memo;
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> tokens(n, 0);
    const int combos = 1 << (2 * n);  // each entry ranges over 0..3
    for (int code = 0; code < combos; ++code) {
      for (int i = 0; i < n; ++i) tokens[i] = (code >> (2 * i)) & 3;
      const int total = std::accumulate(tokens.begin(), tokens.end(), 0);
      for (int rounds = 0; rounds <= total + 2; ++rounds) {
        bool fast = schedule_feasible(tokens, rounds);
        bool slow = reference_feasible(tokens, rounds, memo);
        if (fast != slow) {
          std::ostringstream what;
          what << "tokens";
          for (int t : tokens) what << " " << t;
          what << " in " << rounds << " rounds: closed form says "
               << (fast ? "feasible" : "infeasible") << ", brute force disagrees";
          sink.expect(false, what.str());
        } else {
          sink.expect(true, "");
        }
      }
    }
  }
}

// ---- restricting the coloring side to maximal responses is harmless ---------

void suite_dominance(const SuiteOptions& opts, Sink& sink) {
  const int cap = clamp_n(opts, 5);
  struct Job {
    Graph g;
    TokenAssignment f;
    std::string label;
  };
  std::vector<Job> jobs;
  for (Graph& g : universe_up_to(cap)) {
    jobs.push_back({g, TokenAssignment::uniform(g, 2), tag(g) + " f=2"});
    if (g.order() <= 4) {
      for (int v = 0; v < g.order(); ++v) {
        jobs.push_back({g, TokenAssignment::fprime(g, v),
                        tag(g) + " light=" + std::to_string(v)});
      }
    }
  }
  parallel_for_index(static_cast<int>(jobs.size()), opts.workers, [&](int i) {
    const Job& job = jobs[i];
    SolverOptions all;
    all.maximal_responses = false;
    Solver restricted(job.g);
    Solver exhaustive(job.g, all);
    sink.expect(restricted.solve(job.f, Variant::unbounded()) ==
                    exhaustive.solve(job.f, Variant::unbounded()),
                job.label + ": unbounded verdicts diverge");
    for (int t = job.f.max(); t <= job.f.sum(); ++t) {
      sink.expect(restricted.solve(job.f, Variant::exact(t)) ==
                      exhaustive.solve(job.f, Variant::exact(t)),
                  job.label + " t=" + std::to_string(t) + ": verdicts diverge");
    }
    sink.expect(restricted.compute_q(job.f) == exhaustive.compute_q(job.f),
                job.label + ": kill costs diverge");
  });
}

// ---- a disjoint union is survivable iff every part is -----------------------

void suite_union(const SuiteOptions& opts, Sink& sink) {
  const int cap = clamp_n(opts, 7);

  // Two tokens everywhere, all unordered pairs of connected parts.
  std::vector<Graph> parts = universe_up_to(cap - 1);
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i; j < parts.size(); ++j) {
      if (parts[i].order() + parts[j].order() <= cap) {
        pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  parallel_for_index(static_cast<int>(pairs.size()), opts.workers, [&](int k) {
    const Graph& h = parts[pairs[k].first];
    const Graph& m = parts[pairs[k].second];
    bool parts_survive =
        graph_values(h).two_paintable && graph_values(m).two_paintable;
    Graph u = disjoint_union(h, m);
    Solver solver(u);
    bool union_survives = solver.solve(TokenAssignment::uniform(u, 2),
                                       Variant::unbounded()) ==
                          Verdict::PainterWins;
    sink.expect(union_survives == parts_survive,
                tag(h) + " | " + tag(m) + ": union survivability differs from parts");
  });

  // Mixed budgets on tiny parts.
  struct Unit {
    const Graph* g;
    std::vector<int> budgets;
    bool survives;
  };
  std::vector<Graph> tiny = universe_up_to(std::min(3, cap - 1));
  std::vector<Unit> units;
  for (const Graph& g : tiny) {
    Solver solver(g);
    for (int mask = 0; mask < (1 << g.order()); ++mask) {
      std::vector<int> budgets(g.order());
      for (int v = 0; v < g.order(); ++v) budgets[v] = vs_contains(mask, v) ? 1 : 2;
      bool survives = solver.solve(TokenAssignment::from_values(budgets),
                                   Variant::unbounded()) == Verdict::PainterWins;
      units.push_back({&g, budgets, survives});
    }
  }
  std::vector<std::pair<int, int>> unit_pairs;
  for (std::size_t i = 0; i < units.size(); ++i) {
    for (std::size_t j = i; j < units.size(); ++j) {
      if (units[i].g->order() + units[j].g->order() <= cap) {
        unit_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  parallel_for_index(static_cast<int>(unit_pairs.size()), opts.workers, [&](int k) {
    const Unit& a = units[unit_pairs[k].first];
    const Unit& b = units[unit_pairs[k].second];
    Graph u = disjoint_union(*a.g, *b.g);
    std::vector<int> budgets = a.budgets;
    budgets.insert(budgets.end(), b.budgets.begin(), b.budgets.end());
    Solver solver(u);
    bool union_survives = solver.solve(TokenAssignment::from_values(budgets),
                                       Variant::unbounded()) ==
                          Verdict::PainterWins;
    std::ostringstream what;
    what << tag(*a.g) << "/" << TokenAssignment::from_values(a.budgets).to_string()
         << " | " << tag(*b.g) << "/"
         << TokenAssignment::from_values(b.budgets).to_string()
         << ": mixed-budget union survivability differs from parts";
    sink.expect(union_survives == (a.survives && b.survives), what.str());
  });
}

// ---- deleting an edge or a vertex never helps the marking side --------------

void suite_subgraph_monotonicity(const SuiteOptions& opts, Sink& sink) {
  const int cap = clamp_n(opts, 6);
  std::vector<Graph> graphs;
  for (Graph& g : universe_up_to(cap)) {
    if (g.order() >= 2) graphs.push_back(std::move(g));
  }
  parallel_for_index(static_cast<int>(graphs.size()), opts.workers, [&](int i) {
    const Graph& g = graphs[i];
    GraphValues vg = graph_values(g);

    for (auto [a, b] : g.edges()) {
      Graph h(g.order());
      for (auto [x, y] : g.edges()) {
        if (!(x == a && y == b)) h.add_edge(x, y);
      }
      if (!is_connected(h)) continue;
      GraphValues vh = graph_values(h);
      std::string label =
          tag(g) + " minus edge " + std::to_string(a) + "-" + std::to_string(b);
      sink.expect(!vg.two_paintable || vh.two_paintable,
                  label + ": survivable graph has an unsurvivable spanning subgraph");
      if (!vh.two_paintable && !vg.two_paintable) {
        sink.expect(vg.m && vh.m && *vg.m <= *vh.m,
                    label + ": least losing round count grew after deletion");
        sink.expect(vg.M && vh.M && *vg.M >= *vh.M,
                    label + ": greatest losing round count shrank after deletion");
      }
    }

    for (int v = 0; v < g.order(); ++v) {
      VertexSet keep = g.vertices() & ~vbit(v);
      Graph h = induced_subgraph(g, keep);
      if (!is_connected(h)) continue;
      GraphValues vh = graph_values(h);
      std::string label = tag(g) + " minus vertex " + std::to_string(v);
      sink.expect(!vg.two_paintable || vh.two_paintable,
                  label + ": survivable graph has an unsurvivable induced subgraph");
      if (!vh.two_paintable) {
        sink.expect(!vg.two_paintable,
                    label + ": marking side wins the part but not the whole");
        sink.expect(vg.m && vh.m && *vg.m <= std::max(2, *vh.m),
                    label + ": least losing round count above the lifted bound");
        sink.expect(vg.M && vh.M && *vg.M >= *vh.M + 2,
                    label + ": greatest losing round count below the lifted bound");
      }
    }
  });
}

// ---- structural 2-paintability matches the unbounded game -------------------

void suite_two_paintable(const SuiteOptions& opts, Sink& sink) {
  absorb(sink, cross_validate("two-paintable", clamp_n(opts, 7), opts.workers));
}

// ---- kill-cost characterizations for budgets of one and two -----------------

bool has_edge_11(const Graph& g, const std::vector<int>& h) {
  for (auto [u, v] : g.edges()) {
    if (h[u] == 1 && h[v] == 1) return true;
  }
  return false;
}

bool has_path3_121(const Graph& g, const std::vector<int>& h) {
  for (int b = 0; b < g.order(); ++b) {
    if (h[b] != 2) continue;
    int light = 0;
    for (int v : vs_to_vector(g.neighbors(b))) light += h[v] == 1;
    if (light >= 2) return true;
  }
  return false;
}

bool has_path4_1221(const Graph& g, const std::vector<int>& h) {
  for (auto [b, c] : g.edges()) {
    if (h[b] != 2 || h[c] != 2) continue;
    VertexSet ends_b = 0, ends_c = 0;  // light outer-neighbor candidates
    for (int v : vs_to_vector(g.neighbors(b) & ~vbit(c))) {
      if (h[v] == 1) ends_b |= vbit(v);
    }
    for (int v : vs_to_vector(g.neighbors(c) & ~vbit(b))) {
      if (h[v] == 1) ends_c |= vbit(v);
    }
    // Need one light end off each side, and the ends must be distinct.
    if (ends_b && ends_c && (ends_b != ends_c || vs_size(ends_b) >= 2)) return true;
  }
  return false;
}

bool has_triangle_122(const Graph& g, const std::vector<int>& h) {
  for (auto [u, v] : g.edges()) {
    for (int w : vs_to_vector(g.neighbors(u) & g.neighbors(v))) {
      // Budgets are 1 or 2 here, so a sum of 5 pins the multiset {1,2,2}.
      if (h[u] + h[v] + h[w] == 5) return true;
    }
  }
  return false;
}

void suite_kill_cost_patterns(const SuiteOptions& opts, Sink& sink) {
  const int cap = clamp_n(opts, 5);
  std::vector<Graph> graphs = universe_up_to(cap);
  parallel_for_index(static_cast<int>(graphs.size()), opts.workers, [&](int i) {
    const Graph& g = graphs[i];
    Solver solver(g);
    const int n = g.order();
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> h(n);
      for (int v = 0; v < n; ++v) h[v] = vs_contains(mask, v) ? 1 : 2;
      CostValue q = solver.compute_q(TokenAssignment::from_values(h));
      std::ostringstream label;
      label << tag(g) << " budgets";
      for (int v : h) label << " " << v;

      sink.expect(q != 0, label.str() + ": zero kill cost is impossible");
      bool edge11 = has_edge_11(g, h);
      sink.expect((q == 1) == edge11,
                  label.str() + ": kill cost 1 iff an all-light edge exists");
      bool cost2_shape = !edge11 && (has_path3_121(g, h) || has_path4_1221(g, h) ||
                                     has_triangle_122(g, h));
      sink.expect((q == 2) == cost2_shape,
                  label.str() + ": kill cost 2 iff the three light-end shapes");
      if (mask == 0) {
        sink.expect((q == 3) == contains_triangle(g),
                    label.str() + ": kill cost 3 iff a triangle (all-2 budgets)");
      }
    }
  });
}

// ---- the greatest losing round count complements the kill cost --------------

void suite_qgame(const SuiteOptions& opts, Sink& sink) {
  const int cap = clamp_n(opts, 6);
  std::vector<Graph> graphs = universe_up_to(cap);
  parallel_for_index(static_cast<int>(graphs.size()), opts.workers, [&](int i) {
    const Graph& g = graphs[i];
    GraphValues v = graph_values(g);
    if (v.two_paintable) {
      sink.expect(!v.m && !v.M && !v.q,
                  tag(g) + ": survivor carries losing rounds or a kill cost");
      return;
    }
    const int n = g.order();
    sink.expect(v.m && v.M && v.q,
                tag(g) + ": non-survivor is missing a game value");
    if (v.M && v.q) {
      sink.expect(*v.M == 2 * n - *v.q,
                  tag(g) + ": greatest losing rounds != token total minus kill cost");
      sink.expect(*v.q >= 3, tag(g) + ": kill cost below 3 with all-2 budgets");
    }
  });
}

// ---- least losing round count: the structural trichotomy --------------------

void suite_m_classification(const SuiteOptions& opts, Sink& sink) {
  const int cap = clamp_n(opts, 6);
  absorb(sink, cross_validate("m", cap, opts.workers));
  std::vector<Graph> graphs = universe_up_to(cap);
  parallel_for_index(static_cast<int>(graphs.size()), opts.workers, [&](int i) {
    const Graph& g = graphs[i];
    if (is_2_paintable_structural(g)) return;
    GraphValues v = graph_values(g);
    if (is_bipartite(g)) {
      sink.expect(v.m && *v.m >= 3,
                  tag(g) + ": bipartite graph lost a 2-round game");
    } else {
      sink.expect(v.m == 2, tag(g) + ": odd cycle present but m != 2");
    }
  });
}

// ---- greatest losing round count: bounds and extreme characterizations ------

void suite_M_bounds(const SuiteOptions& opts, Sink& sink) {
  absorb(sink, cross_validate("M-bounds", clamp_n(opts, 6), opts.workers));
}

void suite_M_extremes(const SuiteOptions& opts, Sink& sink) {
  absorb(sink, cross_validate("M-extremes", clamp_n(opts, 6), opts.workers));
  const int reach = opts.n_max.value_or(7);
  if (reach >= 6) {
    GraphValues k24 = graph_values(make_K2n(4));
    sink.expect(k24.m == 4 && k24.M == 7,
                "K_{2,4}: landmark values m=4, M=7 not reproduced");
    sink.expect(graph_values(make_tadpole(2, 5)).M == 7,
                "5-ring with a pendant: M != n+1");
    GraphValues theta = graph_values(make_theta(1, 3, 3));
    sink.expect(theta.M && *theta.M >= 8,
                "theta 1,3,3: M below n+2");
  }
  if (reach >= 7) {
    Graph g = make_dumbbell(4, 1, 4);
    Solver solver(g);
    sink.expect(solver.solve(TokenAssignment::uniform(g, 2), Variant::exact(9)) ==
                    Verdict::ListerWins,
                "two 4-rings sharing a vertex: marking side fails at n+2 rounds");
  }
}

// ---- every scripted strategy beats the optimal opponent ---------------------

void suite_strategies(const SuiteOptions& opts, Sink& sink) {
  const int cap = opts.n_max.value_or(99);
  const int tree_cap = std::min(cap, 8);

  auto run = [&](const Graph& g, const TokenAssignment& f, const Variant& var,
                 ListerStrategy* lister, PainterStrategy* painter, Solver& solver,
                 Verdict expected, const std::string& label) {
    try {
      Transcript t = play_match(g, f, var, lister, painter, solver);
      sink.expect(t.verdict == expected, label + ": scripted side lost");
    } catch (const std::exception& e) {
      sink.expect(false, label + ": exception: " + e.what());
    }
  };

  // Survival on trees via kernels, every choice of the light vertex.
  std::vector<Graph> trees;
  for (int n = 1; n <= tree_cap; ++n) {
    for (Graph& t : enumerate_trees(n)) trees.push_back(std::move(t));
  }
  parallel_for_index(static_cast<int>(trees.size()), opts.workers, [&](int i) {
    const Graph& g = trees[i];
    Solver solver(g);
    for (int root = 0; root < g.order(); ++root) {
      TokenAssignment f = TokenAssignment::fprime(g, root);
      auto painter = make_kernel_painter(g, f);
      run(g, f, Variant::unbounded(), nullptr, painter.get(), solver,
          Verdict::PainterWins,
          "tree " + tag(g) + " light=" + std::to_string(root));
    }
  });

  // Path attack: split rounds from 2 (1 on the single edge) up to the bound.
  std::vector<int> path_sizes;
  for (int n = 2; n <= tree_cap; ++n) path_sizes.push_back(n);
  parallel_for_index(static_cast<int>(path_sizes.size()), opts.workers, [&](int i) {
    const int n = path_sizes[i];
    Graph g = make_path(n);
    TokenAssignment f = TokenAssignment::fdoubleprime(g);
    Solver solver(g);
    for (int t = n == 2 ? 1 : 2; t <= path_attack_bound(n); ++t) {
      auto lister = make_path_lister(g, t);
      run(g, f, Variant::exact(t), lister.get(), nullptr, solver,
          Verdict::ListerWins, "path n=" + std::to_string(n) + " t=" + std::to_string(t));
    }
  });

  // Hub-and-leaf survival in three rounds, and the four-round attack on K_{2,4}.
  std::vector<int> k2n_sizes;
  for (int n = 4; n <= 9; ++n) {
    if (n + 2 <= cap) k2n_sizes.push_back(n);
  }
  parallel_for_index(static_cast<int>(k2n_sizes.size()), opts.workers, [&](int i) {
    const int n = k2n_sizes[i];
    Graph g = make_K2n(n);
    SolverOptions so;
    so.max_n = 12;
    Solver solver(g, so);
    TokenAssignment f = TokenAssignment::uniform(g, 2);
    auto painter = make_k2n_painter(g);
    run(g, f, Variant::exact(3), nullptr, painter.get(), solver,
        Verdict::PainterWins, "K_{2," + std::to_string(n) + "} t=3");
  });
  if (6 <= cap) {
    Graph g = make_K2n(4);
    Solver solver(g);
    auto lister = make_k24_lister(g, 4);
    run(g, TokenAssignment::uniform(g, 2), Variant::exact(4), lister.get(), nullptr,
        solver, Verdict::ListerWins, "K_{2,4} t=4");
  }

  // Rings: the all-marks attack on odd rings, kernel survival elsewhere.
  std::vector<int> ring_sizes;
  for (int n = 3; n <= std::min(cap, 7); ++n) ring_sizes.push_back(n);
  parallel_for_index(static_cast<int>(ring_sizes.size()), opts.workers, [&](int i) {
    const int n = ring_sizes[i];
    Graph g = make_cycle(n);
    TokenAssignment f = TokenAssignment::uniform(g, 2);
    Solver solver(g);
    if (n % 2 == 1) {
      for (int t = 2; t <= n; ++t) {
        auto lister = make_cycle_lister(g, t);
        run(g, f, Variant::exact(t), lister.get(), nullptr, solver,
            Verdict::ListerWins,
            "ring n=" + std::to_string(n) + " t=" + std::to_string(t));
      }
      for (int t = n + 1; t <= 2 * n; ++t) {
        auto painter = make_kernel_painter(g, f);
        run(g, f, Variant::exact(t), nullptr, painter.get(), solver,
            Verdict::PainterWins,
            "odd ring n=" + std::to_string(n) + " kernel t=" + std::to_string(t));
      }
    } else {
      auto painter = make_kernel_painter(g, f);
      run(g, f, Variant::unbounded(), nullptr, painter.get(), solver,
          Verdict::PainterWins, "even ring n=" + std::to_string(n) + " unbounded");
      for (int t : {2, n, n + 1, 2 * n}) {
        painter = make_kernel_painter(g, f);
        run(g, f, Variant::exact(t), nullptr, painter.get(), solver,
            Verdict::PainterWins,
            "even ring n=" + std::to_string(n) + " kernel t=" + std::to_string(t));
      }
    }
  });

  // Ring-with-tail, two-ring, and three-path attacks over their full envelopes.
  struct Attack {
    Graph g;
    TokenAssignment f;
    int t_low;
    int t_high;
    std::function<std::unique_ptr<ListerStrategy>(const Graph&, int)> build;
    std::string label;
  };
  std::vector<Attack> attacks;
  auto add_tadpole = [&](int m, int n) {
    Graph g = make_tadpole(m, n);
    if (g.order() > cap) return;
    TokenAssignment f = TokenAssignment::fstar(g);
    attacks.push_back({g, f, n % 2 == 1 ? 2 : 3, tadpole_attack_bound(m, n),
                       [f](const Graph& gg, int t) { return make_tadpole_lister(gg, f, t); },
                       "tail " + std::to_string(m) + " ring " + std::to_string(n)});
  };
  add_tadpole(2, 3);
  add_tadpole(2, 5);
  add_tadpole(3, 4);
  auto add_dumbbell = [&](int m, int k, int n) {
    Graph g = make_dumbbell(m, k, n);
    if (g.order() > cap) return;
    attacks.push_back({g, TokenAssignment::uniform(g, 2), 3,
                       dumbbell_attack_bound(m, k, n),
                       [](const Graph& gg, int t) { return make_dumbbell_lister(gg, t); },
                       "rings " + std::to_string(m) + "+" + std::to_string(n) +
                           " link " + std::to_string(k)});
  };
  add_dumbbell(3, 1, 3);
  add_dumbbell(3, 2, 3);
  add_dumbbell(4, 1, 4);
  auto add_theta = [&](int p, int q, int r) {
    Graph g = make_theta(p, q, r);
    if (g.order() > cap) return;
    attacks.push_back({g, TokenAssignment::uniform(g, 2), 4, theta_attack_bound(p, q, r),
                       [](const Graph& gg, int t) { return make_theta_lister(gg, t); },
                       "theta " + std::to_string(p) + "," + std::to_string(q) + "," +
                           std::to_string(r)});
  };
  add_theta(1, 3, 3);
  add_theta(2, 2, 3);
  add_theta(2, 3, 3);
  parallel_for_index(static_cast<int>(attacks.size()), opts.workers, [&](int i) {
    const Attack& a = attacks[i];
    Solver solver(a.g);
    for (int t = a.t_low; t <= a.t_high; ++t) {
      auto lister = a.build(a.g, t);
      run(a.g, a.f, Variant::exact(t), lister.get(), nullptr, solver,
          Verdict::ListerWins, a.label + " t=" + std::to_string(t));
    }
  });

  // Two-round survival of bipartite graphs.
  std::vector<Graph> bip = {make_cycle(4), make_cycle(6), make_path(5), make_K2n(3),
                            make_K2n(4)};
  parallel_for_index(static_cast<int>(bip.size()), opts.workers, [&](int i) {
    const Graph& g = bip[i];
    if (g.order() > cap) return;
    TokenAssignment f = TokenAssignment::uniform(g, 2);
    Solver solver(g);
    auto painter = make_bipartite_painter(g, f);
    run(g, f, Variant::exact(2), nullptr, painter.get(), solver,
        Verdict::PainterWins, "bipartite " + tag(g) + " t=2");
  });
}

using SuiteFn = void (*)(const SuiteOptions&, Sink&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"feasibility-oracle", suite_feasibility_oracle},
      {"cycle-intervals", suite_cycle_intervals},
      {"dominance", suite_dominance},
      {"union", suite_union},
      {"two-paintable", suite_two_paintable},
      {"kill-cost-patterns", suite_kill_cost_patterns},
      {"qgame", suite_qgame},
      {"m-classification", suite_m_classification},
      {"M-bounds", suite_M_bounds},
      {"M-extremes", suite_M_extremes},
      {"subgraph-monotonicity", suite_subgraph_monotonicity},
      {"strategies", suite_strategies},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  for (const auto& [suite_name, fn] : registry()) {
    if (suite_name != name) continue;
    SuiteResult result;
    result.name = name;
    Sink sink;
    auto start = std::chrono::steady_clock::now();
    fn(opts, sink);
    auto stop = std::chrono::steady_clock::now();
    sink.drain(result);
    result.seconds = std::chrono::duration<double>(stop - start).count();
    return result;
  }
  throw std::invalid_argument("unknown verification suite: " + name);
}

}  // namespace paint
