// paintgame: command-line surface over the round-limited graph marking game.
//
//   solve   verdict / m / M / q for one graph (or a stream of graph6 lines)
//   verify  exhaustive verification suites; exit 0 only when every check passes
//   scan    losing-round-interval scan over all small connected graphs
//   play    interactive session against the optimal engine
//
// Exit codes: 0 success, 1 verification mismatch, 2 precondition failure,
// 64 usage or malformed configuration.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "paint/canon.hpp"
#include "paint/classify.hpp"
#include "paint/game.hpp"
#include "paint/graph.hpp"
#include "paint/solver.hpp"
#include "paint/strategy.hpp"
#include "paint/verify.hpp"

using nlohmann::ordered_json;
using namespace paint;

namespace {

// Malformed specs and inputs (as opposed to violated game preconditions).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw UsageError(what + ": '" + piece + "' is not an integer");
    }
  }
  if (out.empty()) throw UsageError(what + ": no values given");
  return out;
}

Graph parse_family(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw UsageError("family spec needs name:args, e.g. cycle:5");
  }
  const std::string name = spec.substr(0, colon);
  std::vector<int> a = parse_int_list(spec.substr(colon + 1), "family " + name);
  auto arity = [&](std::size_t want) {
    if (a.size() != want) {
      throw UsageError("family " + name + " takes " + std::to_string(want) +
                       " integer(s)");
    }
  };
  if (name == "cycle") return arity(1), make_cycle(a[0]);
  if (name == "path") return arity(1), make_path(a[0]);
  if (name == "k2n") return arity(1), make_K2n(a[0]);
  if (name == "theta") return arity(3), make_theta(a[0], a[1], a[2]);
  if (name == "dumbbell") return arity(3), make_dumbbell(a[0], a[1], a[2]);
  if (name == "tadpole") return arity(2), make_tadpole(a[0], a[1]);
  throw UsageError("unknown family '" + name +
                   "' (cycle, path, k2n, theta, dumbbell, tadpole)");
}

TokenAssignment parse_budgets(const std::string& spec, const Graph& g) {
  if (spec == "fstar") return TokenAssignment::fstar(g);
  if (spec == "fdoubleprime") return TokenAssignment::fdoubleprime(g);
  auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (name == "uniform") {
    return TokenAssignment::uniform(g, parse_int_list(arg, "uniform budget")[0]);
  }
  if (name == "fprime") {
    return TokenAssignment::fprime(g, parse_int_list(arg, "fprime vertex")[0]);
  }
  if (name == "file") {
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot open budget file " + arg);
    std::vector<int> values;
    int v = 0;
    while (in >> v) values.push_back(v);
    return TokenAssignment::from_values(values);
  }
  throw UsageError("unknown budget spec '" + spec +
                   "' (uniform:k, fprime:v, fstar, fdoubleprime, file:path)");
}

Variant parse_variant(const std::string& spec) {
  if (auto var = variant_from_string(spec)) return *var;
  throw UsageError("unknown variant '" + spec + "' (unbounded, exact:t, cost)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ---- solve -------------------------------------------------------------------

struct SolveConfig {
  std::string graph6, file, family;
  std::string budgets = "uniform:2";
  std::string variant = "unbounded";
  std::string compute = "verdict";
  std::string output = "json";
  int max_n = 10;
  std::size_t memo_cap = std::size_t(1) << 24;
};

void check_single_source(const std::string& graph6, const std::string& file,
                         const std::string& family) {
  int sources = !graph6.empty() + !file.empty() + !family.empty();
  if (sources != 1) {
    throw UsageError("give exactly one graph source (--graph6, --file or --family)");
  }
}

ordered_json solve_one(const Graph& g, const SolveConfig& cfg) {
  TokenAssignment f = parse_budgets(cfg.budgets, g);
  SolverOptions opts;
  opts.max_n = cfg.max_n;
  opts.memo_cap = cfg.memo_cap;
  Solver solver(g, opts);
  ordered_json out;
  auto put = [&](const char* key, const std::optional<int>& v) {
    if (v) {
      out[key] = *v;
    } else {
      out[key] = nullptr;
    }
  };
  if (cfg.compute == "verdict") {
    out["verdict"] = to_string(solver.solve(f, parse_variant(cfg.variant)));
  } else if (cfg.compute == "m") {
    put("m", solver.compute_m(f));
  } else if (cfg.compute == "M") {
    put("M", solver.compute_M(f));
  } else if (cfg.compute == "q") {
    put("q", solver.compute_q(f));
  } else {
    throw UsageError("unknown computation '" + cfg.compute + "' (verdict, m, M, q)");
  }
  return out;
}

void emit(const ordered_json& row, const std::string& output) {
  if (output == "json") {
    std::cout << row.dump() << "\n";
    return;
  }
  for (const auto& [key, value] : row.items()) {
    std::cout << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump())
              << "\n";
  }
}

int cmd_solve(const SolveConfig& cfg) {
  check_single_source(cfg.graph6, cfg.file, cfg.family);
  if (cfg.output != "json" && cfg.output != "text") {
    throw UsageError("unknown output mode '" + cfg.output + "'");
  }
  if (cfg.file == "-") {  // one graph6 per stdin line, one report line each
    std::string line;
    while (std::getline(std::cin, line)) {
      if (line.empty()) continue;
      Graph g = from_graph6(line);
      ordered_json row;
      row["graph6"] = line;
      row.update(solve_one(g, cfg));
      emit(row, cfg.output);
    }
    return 0;
  }
  Graph g = !cfg.family.empty()  ? parse_family(cfg.family)
            : !cfg.graph6.empty() ? from_graph6(cfg.graph6)
                                  : from_graph6(read_file(cfg.file));
  emit(solve_one(g, cfg), cfg.output);
  return 0;
}

// ---- verify --------------------------------------------------------------------

int cmd_verify(const std::vector<std::string>& names, int workers,
               std::optional<int> n_max) {
  std::vector<std::string> todo;
  if (names.empty() || (names.size() == 1 && names[0] == "all")) {
    todo = suite_names();
  } else {
    const std::vector<std::string> known = suite_names();
    std::string all;
    for (const std::string& k : known) all += (all.empty() ? "" : ", ") + k;
    for (const std::string& name : names) {
      if (std::find(known.begin(), known.end(), name) == known.end()) {
        throw UsageError("unknown suite '" + name + "'; known suites: " + all);
      }
    }
    todo = names;
  }
  SuiteOptions opts;
  opts.workers = workers;
  opts.n_max = n_max;
  int total_checks = 0, total_failures = 0;
  for (const std::string& name : todo) {
    SuiteResult r = run_suite(name, opts);
    for (const std::string& f : r.failures) {
      ordered_json line;
      line["suite"] = r.name;
      line["failure"] = f;
      std::cout << line.dump() << "\n";
    }
    ordered_json line;
    line["suite"] = r.name;
    line["checks"] = r.checks;
    line["failures"] = r.failures.size();
    line["seconds"] = r.seconds;
    line["ok"] = r.ok();
    std::cout << line.dump() << "\n";
    total_checks += r.checks;
    total_failures += static_cast<int>(r.failures.size());
  }
  std::cerr << todo.size() << " suite(s), " << total_checks << " checks, "
            << total_failures << " failure(s)\n";
  return total_failures == 0 ? 0 : 1;
}

// ---- scan ----------------------------------------------------------------------

std::set<std::string> family_forms(const std::string& name, int cap) {
  std::set<std::string> forms;
  auto add = [&](const Graph& g) {
    if (g.order() <= cap) forms.insert(canonical_form(g));
  };
  if (name == "cycle") {
    for (int n = 3; n <= cap; ++n) add(make_cycle(n));
  } else if (name == "path") {
    for (int n = 1; n <= cap; ++n) add(make_path(n));
  } else if (name == "k2n") {
    for (int n = 1; n + 2 <= cap; ++n) add(make_K2n(n));
  } else if (name == "theta") {
    for (int p = 1; p <= cap; ++p)
      for (int q = std::max(p, 2); q <= cap; ++q)
        for (int r = q; p + q + r - 1 <= cap; ++r) add(make_theta(p, q, r));
  } else if (name == "dumbbell") {
    for (int m = 3; m <= cap; ++m)
      for (int n = m; n <= cap; ++n)
        for (int k = 1; m + n + k - 2 <= cap; ++k) add(make_dumbbell(m, k, n));
  } else if (name == "tadpole") {
    for (int m = 2; m <= cap; ++m)
      for (int n = 3; m + n - 1 <= cap; ++n) add(make_tadpole(m, n));
  } else {
    throw UsageError("unknown family '" + name + "' for --family-only");
  }
  return forms;
}

int cmd_scan(int n_max, const std::string& family_only, const std::string& budgets,
             int workers, bool big_ok) {
  if (n_max > 6 && !big_ok) {
    throw UsageError("scans above n=6 need --i-know-this-is-big");
  }
  ScanOptions opts;
  opts.n_max = n_max;
  opts.workers = workers;
  if (budgets != "uniform:2") {
    auto colon = budgets.find(':');
    const std::string kind = budgets.substr(0, colon);
    if (kind != "uniform" && kind != "fprime") {
      throw UsageError("scan budgets must be uniform:k or fprime:v");
    }
    opts.budgets = [budgets](const Graph& g) { return parse_budgets(budgets, g); };
  }
  if (!family_only.empty()) {
    auto forms = family_forms(family_only, n_max);
    opts.filter = [forms](const Graph& g) { return forms.count(canonical_form(g)) > 0; };
  }
  ScanReport report = interval_scan(opts);
  for (const ScanRow& row : report.rows) {
    ordered_json line;
    line["graph6"] = row.graph6;
    line["n"] = row.n;
    line["losing"] = row.losing;
    line["contiguous"] = row.contiguous;
    line["paintable"] = row.paintable;
    std::cout << line.dump() << "\n";
  }
  for (const std::string& f : report.failures) std::cerr << "inconsistent: " << f << "\n";
  if (report.non_contiguous == 0) {
    std::cerr << "all " << report.rows.size() << " losing sets contiguous up to n="
              << n_max << "\n";
  } else {
    std::cerr << report.non_contiguous << " non-contiguous losing set(s):";
    for (const std::string& g6 : report.counterexamples) std::cerr << " " << g6;
    std::cerr << "\n";
  }
  return report.failures.empty() ? 0 : 1;
}

// ---- play ----------------------------------------------------------------------

std::optional<VertexSet> read_vertex_set(const Graph& g, const std::string& prompt) {
  std::cout << prompt << std::flush;
  std::string line;
  if (!std::getline(std::cin, line)) return std::nullopt;  // EOF aborts
  VertexSet s = 0;
  std::istringstream in(line);
  std::string piece;
  while (in >> piece) {
    try {
      std::size_t used = 0;
      int v = std::stoi(piece, &used);
      if (used != piece.size() || v < 0 || v >= g.order()) throw std::invalid_argument(piece);
      s |= vbit(v);
    } catch (const std::exception&) {
      std::cout << "  '" << piece << "' is not a vertex id; try again\n";
      return read_vertex_set(g, prompt);
    }
  }
  return s;
}

std::string lister_move_problem(const Graph& g, const GameState& s, const Variant& var,
                                VertexSet marked) {
  if (marked == 0) return "mark at least one vertex";
  if ((marked & markable_vertices(g, s, var)) != marked) {
    return "a vertex in that set cannot be marked (no tokens left, or already "
           "colored)";
  }
  return "that marking leaves an impossible schedule for the remaining rounds";
}

std::string painter_response_problem(const GameState& s, VertexSet marked,
                                     VertexSet chosen) {
  if ((chosen & (marked & ~s.colored)) != chosen) {
    return "not among the marked uncolored vertices";
  }
  return "not independent";
}

void show_state(const Graph& g, const GameState& s, const Variant& var, int round) {
  std::cout << "--- round " << round;
  if (var.kind == Variant::Kind::Exact) std::cout << " | rounds left " << s.rounds_left;
  std::cout << " ---\n" << "tokens:";
  for (int v = 0; v < g.order(); ++v) std::cout << " " << s.tokens[v];
  std::cout << "\ncolored: " << vs_to_string(s.colored) << "\n";
}

int cmd_play(const std::string& graph6, const std::string& file, const std::string& family,
             const std::string& budgets, const std::string& variant_spec,
             const std::string& role, const std::string& transcript_path) {
  check_single_source(graph6, file, family);
  if (role != "painter" && role != "lister") {
    throw UsageError("--role must be painter or lister");
  }
  Graph g = !family.empty()  ? parse_family(family)
            : !graph6.empty() ? from_graph6(graph6)
                              : from_graph6(read_file(file));
  TokenAssignment f = parse_budgets(budgets, g);
  Variant var = parse_variant(variant_spec);
  if (var.kind == Variant::Kind::Cost) {
    throw UsageError("play supports the unbounded and exact variants");
  }
  Solver solver(g);
  const bool human_paints = role == "painter";

  std::cout << "graph: " << to_graph6(g) << " (" << g.order() << " vertices)\nedges:";
  for (auto [u, v] : g.edges()) std::cout << " " << u << "-" << v;
  std::cout << "\nbudgets: " << f.to_string() << "\nvariant: " << to_string(var)
            << "\nyou play: " << role << "\n";

  Transcript t;
  t.graph6 = to_graph6(g);
  t.budgets = f.to_string();
  t.variant = to_string(var);

  auto flush_transcript = [&](const std::string& final_line) {
    std::ofstream out(transcript_path);
    for (const TranscriptRound& r : t.rounds) {
      out << r.index << " | V=" << vs_to_string(r.marked)
          << " | X=" << vs_to_string(r.chosen) << "\n";
    }
    out << final_line << "\n";
    std::cout << "transcript saved to " << transcript_path << "\n";
  };

  GameState s = initial_state(g, f, var);
  int round = 1;
  while (true) {
    if (auto verdict = terminal_verdict(g, s, var)) {
      t.verdict = *verdict;
      break;
    }
    show_state(g, s, var, round);

    VertexSet marked = 0;
    if (human_paints) {
      marked = solver.best_lister_move(s, var);
      if (marked == 0) {  // no legal marking: coloring side wins by default
        t.verdict = Verdict::PainterWins;
        break;
      }
      std::cout << "marked: " << vs_to_string(marked) << "\n";
    } else {
      if (lister_moves(g, s, var).empty()) {
        t.verdict = Verdict::PainterWins;
        break;
      }
      while (true) {
        auto entered = read_vertex_set(g, "mark> ");
        if (!entered) {
          flush_transcript("verdict=aborted");
          std::cout << "session aborted\n";
          return 2;
        }
        if (lister_move_legal(g, s, var, *entered)) {
          marked = *entered;
          break;
        }
        std::cout << "  illegal: " << lister_move_problem(g, s, var, *entered) << "\n";
      }
    }

    VertexSet chosen = 0;
    if (human_paints) {
      while (true) {
        auto entered = read_vertex_set(g, "color> ");
        if (!entered) {
          flush_transcript("verdict=aborted");
          std::cout << "session aborted\n";
          return 2;
        }
        if (painter_response_legal(g, s, marked, *entered)) {
          chosen = *entered;
          break;
        }
        std::cout << "  illegal: " << painter_response_problem(s, marked, *entered)
                  << "\n";
      }
    } else {
      chosen = solver.best_painter_response(s, var, marked);
      std::cout << "engine colors: " << vs_to_string(chosen) << "\n";
    }

    s = apply_round(g, s, var, marked, chosen);
    t.rounds.push_back({round, marked, chosen});
    ++round;
  }

  std::cout << "verdict: " << to_string(t.verdict) << "\n";
  flush_transcript("verdict=" + to_string(t.verdict));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver and verification harness for round-limited "
               "graph marking games"};
  app.require_subcommand(1);

  SolveConfig solve_cfg;
  CLI::App* solve = app.add_subcommand("solve", "compute a verdict or game value");
  solve->add_option("--graph6", solve_cfg.graph6, "inline graph6 string");
  solve->add_option("--file", solve_cfg.file, "file with one graph6 ('-': stdin lines)");
  solve->add_option("--family", solve_cfg.family, "family spec, e.g. cycle:5, theta:2,2,4");
  solve->add_option("--f", solve_cfg.budgets, "budget spec (default uniform:2)");
  solve->add_option("--variant", solve_cfg.variant, "unbounded | exact:t | cost");
  solve->add_option("--compute", solve_cfg.compute, "verdict | m | M | q");
  solve->add_option("--output", solve_cfg.output, "json | text");
  solve->add_option("--max-n", solve_cfg.max_n, "solver vertex cap");
  solve->add_option("--memo-cap", solve_cfg.memo_cap, "solver memo entry cap");

  std::vector<std::string> verify_names;
  int verify_workers = 1;
  std::optional<int> verify_nmax;
  CLI::App* verify = app.add_subcommand("verify", "run exhaustive verification suites");
  verify->add_option("suites", verify_names, "suite names, or 'all'");
  verify->add_option("--workers", verify_workers, "worker threads");
  verify->add_option("--nmax", verify_nmax, "shrink the enumeration universes");

  int scan_nmax = 5;
  std::string scan_family, scan_budgets = "uniform:2";
  int scan_workers = 1;
  bool scan_big = false;
  CLI::App* scan = app.add_subcommand("scan", "losing-round-interval scan");
  scan->add_option("--nmax", scan_nmax, "largest graph order (default 5)");
  scan->add_option("--family-only", scan_family, "restrict to one family");
  scan->add_option("--f", scan_budgets, "uniform:k or fprime:v");
  scan->add_option("--workers", scan_workers, "worker threads");
  scan->add_flag("--i-know-this-is-big", scan_big, "allow n above 6");

  std::string play_graph6, play_file, play_family, play_role = "painter";
  std::string play_budgets = "uniform:2", play_variant = "unbounded";
  std::string play_transcript = "transcript.txt";
  CLI::App* play = app.add_subcommand("play", "interactive session vs the engine");
  play->add_option("--graph6", play_graph6, "inline graph6 string");
  play->add_option("--file", play_file, "file with one graph6");
  play->add_option("--family", play_family, "family spec");
  play->add_option("--f", play_budgets, "budget spec");
  play->add_option("--variant", play_variant, "unbounded | exact:t");
  play->add_option("--role", play_role, "painter | lister");
  play->add_option("--transcript", play_transcript, "where to save the round log");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_cfg);
    if (verify->parsed()) return cmd_verify(verify_names, verify_workers, verify_nmax);
    if (scan->parsed()) {
      return cmd_scan(scan_nmax, scan_family, scan_budgets, scan_workers, scan_big);
    }
    return cmd_play(play_graph6, play_file, play_family, play_budgets, play_variant,
                    play_role, play_transcript);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
