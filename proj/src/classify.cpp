#include "paint/classify.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "paint/canon.hpp"
#include "paint/solver.hpp"
#include "parallel.hpp"

namespace paint {

namespace {

void require_connected(const Graph& g) {
  if (!is_connected(g)) {
    throw std::invalid_argument("classifier requires a connected graph");
  }
}

std::string render(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "none";
}

}  // namespace

bool is_2_paintable_structural(const Graph& g) {
  require_connected(g);
  CoreResult c = core(g);
  const Graph& h = c.core_graph;
  if (h.order() == 1) return true;
  if (is_cycle_graph(h) && h.order() % 2 == 0) return true;
  return is_complete_bipartite_2n(h) == std::optional<int>(3);
}

int m_classifier(const Graph& g) {
  if (is_2_paintable_structural(g)) {
    throw std::invalid_argument("m_classifier requires a non-2-paintable graph");
  }
  if (!is_bipartite(g)) return 2;
  std::optional<int> k2n = core_is_K2n(g);
  if (k2n && *k2n >= 4) return 4;
  return 3;
}

MExtreme M_extremes_classifier(const Graph& g) {
  if (is_2_paintable_structural(g)) {
    throw std::invalid_argument(
        "M_extremes_classifier requires a non-2-paintable graph");
  }
  const int n = g.order();
  MExtreme out;
  auto fire = [&](const std::string& clause, int value) {
    if (out.value && *out.value != value) {
      throw std::logic_error("M extreme clauses disagree: " + clause + "=" +
                             std::to_string(value) + " vs " +
                             std::to_string(*out.value));
    }
    out.value = value;
    out.clauses.push_back(clause);
  };
  if (is_odd_cycle(g)) fire("odd-cycle", n);
  if (contains_triangle(g)) fire("triangle", 2 * n - 3);
  if (is_complete_bipartite_2n(g) == std::optional<int>(4)) fire("k24", n + 1);
  if (n == 4 && contains_triangle(g)) fire("four-vertex-triangle", n + 1);
  if (core_is_odd_cycle(g) == std::optional<int>(n - 1)) {
    fire("odd-cycle-core", n + 1);
  }
  return out;
}

GraphValues graph_values(const Graph& g) {
  static std::mutex mutex;
  static std::unordered_map<std::string, GraphValues> cache;

  require_connected(g);
  std::string key = g.order() <= kMaxCanonOrder ? canonical_form(g) : to_graph6(g);
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  Solver solver(g);
  TokenAssignment f = TokenAssignment::uniform(g, 2);
  GraphValues v;
  v.two_paintable = solver.solve(f, Variant::unbounded()) == Verdict::PainterWins;
  v.m = solver.compute_m(f);
  v.M = solver.compute_M(f);
  v.q = solver.compute_q(f);
  cache.emplace(key, v);
  return v;
}

CrossReport cross_validate(const std::string& suite, int n_max, int workers) {
  const bool two_paint = suite == "two-paintable";
  if (!two_paint && suite != "m" && suite != "M-bounds" && suite != "M-extremes") {
    throw std::invalid_argument("unknown cross-validation suite: " + suite);
  }
  if (n_max < 1 || n_max > 7) {
    throw std::invalid_argument("cross_validate handles 1 <= n_max <= 7");
  }

  std::vector<Graph> universe;
  for (int n = 1; n <= n_max; ++n) {
    for (Graph& g : enumerate_connected_graphs(n)) universe.push_back(std::move(g));
  }

  CrossReport report;
  report.suite = suite;
  report.instances = static_cast<int>(universe.size());
  std::vector<std::optional<CrossRecord>> found(universe.size());

  parallel_for_index(static_cast<int>(universe.size()), workers, [&](int i) {
    const Graph& g = universe[i];
    CrossRecord rec;
    rec.graph6 = to_graph6(g);
    rec.n = g.order();
    if (two_paint) {
      // Structural shape of the core versus the unbounded game itself.
      bool structural = is_2_paintable_structural(g);
      Solver solver(g);
      bool solved = solver.solve(TokenAssignment::uniform(g, 2),
                                 Variant::unbounded()) == Verdict::PainterWins;
      rec.classifier = structural ? "2-paintable" : "not-2-paintable";
      rec.solver = solved ? "2-paintable" : "not-2-paintable";
      rec.match = structural == solved;
      if (!rec.match) found[i] = rec;
      return;
    }
    if (is_2_paintable_structural(g)) return;  // m, M undefined here
    GraphValues v = graph_values(g);
    if (suite == "m") {
      int predicted = m_classifier(g);
      rec.classifier = std::to_string(predicted);
      rec.solver = render(v.m);
      rec.match = v.m == std::optional<int>(predicted);
    } else if (suite == "M-bounds") {
      const int n = g.order();
      rec.classifier = std::to_string(n) + "<=M<=" + std::to_string(2 * n - 3);
      rec.solver = render(v.M);
      rec.match = v.M && *v.M >= n && *v.M <= 2 * n - 3;
    } else {  // M-extremes
      const int n = g.order();
      MExtreme ex = M_extremes_classifier(g);
      std::ostringstream side;
      if (ex.value) {
        side << *ex.value << " (";
        for (std::size_t k = 0; k < ex.clauses.size(); ++k) {
          side << (k ? "," : "") << ex.clauses[k];
        }
        side << ")";
      } else {
        side << "uncovered";
      }
      rec.classifier = side.str();
      rec.solver = render(v.M);
      // Fired clauses must hit M exactly; conversely each covered extreme
      // value of M must have fired its clause.
      bool match = true;
      if (ex.value && v.M != ex.value) match = false;
      if (v.M && (*v.M == n || *v.M == n + 1 || *v.M == 2 * n - 3) &&
          ex.value != v.M) {
        match = false;
      }
      rec.match = match;
    }
    if (!rec.match) found[i] = rec;
  });

  for (auto& f : found) {
    if (f) report.mismatches.push_back(std::move(*f));
  }
  return report;
}

ScanReport interval_scan(const ScanOptions& opts) {
  if (opts.n_max < 1 || opts.n_max > 7) {
    throw std::invalid_argument("interval_scan handles 1 <= n_max <= 7");
  }
  std::vector<Graph> universe;
  for (int n = 1; n <= opts.n_max; ++n) {
    for (Graph& g : enumerate_connected_graphs(n)) {
      if (!opts.filter || opts.filter(g)) universe.push_back(std::move(g));
    }
  }

  ScanReport report;
  report.rows.resize(universe.size());
  parallel_for_index(static_cast<int>(universe.size()), opts.workers, [&](int i) {
    const Graph& g = universe[i];
    TokenAssignment f =
        opts.budgets ? opts.budgets(g) : TokenAssignment::uniform(g, 2);
    Solver solver(g);
    ScanRow row;
    row.graph6 = to_graph6(g);
    row.n = g.order();
    row.paintable = solver.solve(f, Variant::unbounded()) == Verdict::PainterWins;
    for (int t = f.max(); t <= f.sum(); ++t) {
      if (solver.solve(f, Variant::exact(t)) == Verdict::ListerWins) {
        row.losing.push_back(t);
      }
    }
    row.contiguous = row.losing.empty() ||
                     row.losing.back() - row.losing.front() + 1 ==
                         static_cast<int>(row.losing.size());
    report.rows[i] = std::move(row);
  });

  for (const ScanRow& row : report.rows) {
    if (!row.contiguous) {
      ++report.non_contiguous;
      report.counterexamples.push_back(row.graph6);
    }
    if (row.paintable && !row.losing.empty()) {
      report.failures.push_back(row.graph6 +
                                ": unbounded win but nonempty losing set");
    }
  }
  return report;
}

}  // namespace paint
