#include "doctest.h"
#include "paint/canon.hpp"
#include "paint/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

using namespace paint;

namespace {

// Independent isomorphism check by trying every vertex bijection.
bool oracle_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  std::vector<int> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < a.order() && ok; ++u)
      for (int v = u + 1; v < a.order() && ok; ++v)
        ok = a.has_edge(u, v) == b.has_edge(perm[u], perm[v]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

// Count connected graphs up to isomorphism by brute force over all labeled
// graphs on n vertices, deduplicating with canonical_form.
std::set<std::string> labeled_census(int n) {
  std::set<std::string> classes;
  const int pairs = n * (n - 1) / 2;
  for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++bit)
        if ((mask >> bit) & 1) g.add_edge(u, v);
    if (is_connected(g)) classes.insert(canonical_form(g));
  }
  return classes;
}

}  // namespace

TEST_CASE("canonical form is a relabeling invariant") {
  const Graph g = make_tadpole(2, 5);
  const std::string form = canonical_form(g);
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  int tried = 0;
  do {
    CHECK(canonical_form(relabel(g, perm)) == form);
  } while (std::next_permutation(perm.begin(), perm.end()) && ++tried < 100);

  const Graph canon = canonical_graph(g);
  CHECK(to_graph6(canon) == form);
  CHECK(canonical_form(canon) == form);  // idempotent
  CHECK(oracle_isomorphic(g, canon));
}

TEST_CASE("isomorphic() agrees with the permutation oracle") {
  // all pairs of 5-vertex connected representatives, plus scrambles
  const auto reps = enumerate_connected_graphs(5);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i; j < reps.size(); ++j) {
      const bool claimed = isomorphic(reps[i], reps[j]);
      CHECK(claimed == (i == j));
      CHECK(claimed == oracle_isomorphic(reps[i], reps[j]));
    }
  CHECK(isomorphic(make_cycle(6), relabel(make_cycle(6), {3, 5, 1, 0, 4, 2})));
  CHECK(!isomorphic(make_cycle(6), make_K2n(4)));
  CHECK(!isomorphic(make_path(4), make_path(5)));
  CHECK_THROWS(canonical_form(make_cycle(9)));
}

TEST_CASE("connected graph counts match the labeled census") {
  const std::vector<std::size_t> expected = {1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) {
    const auto reps = enumerate_connected_graphs(n);
    CHECK(reps.size() == expected[n - 1]);
    if (n <= 6) {
      const auto census = labeled_census(n);
      CHECK(reps.size() == census.size());
      for (const Graph& g : reps) CHECK(census.count(canonical_form(g)) == 1);
    }
    std::set<std::string> forms;
    for (const Graph& g : reps) {
      CHECK(is_connected(g));
      CHECK(g.order() == n);
      CHECK(to_graph6(g) == canonical_form(g));  // stored canonically
      forms.insert(to_graph6(g));
    }
    CHECK(forms.size() == reps.size());  // pairwise non-isomorphic
  }
  CHECK(enumerate_connected_graphs(7).size() == 853);
  CHECK_THROWS(enumerate_connected_graphs(8));
}

TEST_CASE("tree counts") {
  const std::vector<std::size_t> expected = {1, 1, 1, 2, 3, 6, 11, 23};
  for (int n = 1; n <= 8; ++n) {
    const auto trees = enumerate_trees(n);
    CHECK(trees.size() == expected[n - 1]);
    for (const Graph& t : trees) CHECK(is_tree(t));
  }
}
