#include "paint/canon.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace paint {

namespace {

// Depth-first search over relabelings, minimizing the column-major
// upper-triangle adjacency code (the bit string graph6 packs). Bits are
// accumulated most-significant-first, so integer comparison of equal-length
// prefixes is lexicographic comparison, which lets us prune any branch whose
// partial code already exceeds the best complete code's prefix.
struct CanonSearch {
  const Graph& g;
  int n;
  int total_bits;
  std::uint64_t best_code = ~0ull;  // sentinel until the first leaf
  std::vector<int> perm, best_perm;
  VertexSet used = 0;

  explicit CanonSearch(const Graph& graph)
      : g(graph), n(graph.order()), total_bits(graph.order() * (graph.order() - 1) / 2) {
    perm.assign(n, -1);
    best_perm = perm;
  }

  void dfs(int k, std::uint64_t code, int bits) {
    if (k == n) {
      if (code < best_code) {
        best_code = code;
        best_perm = perm;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (vs_contains(used, v)) continue;
      std::uint64_t column = 0;
      for (int i = 0; i < k; ++i) column = (column << 1) | (g.has_edge(perm[i], v) ? 1 : 0);
      const std::uint64_t next_code = (code << k) | column;
      const int next_bits = bits + k;
      if (best_code != ~0ull && next_bits > 0 &&
          next_code > (best_code >> (total_bits - next_bits)))
        continue;
      perm[k] = v;
      used |= vbit(v);
      dfs(k + 1, next_code, next_bits);
      used &= ~vbit(v);
    }
  }
};

}  // namespace

Graph canonical_graph(const Graph& g) {
  if (g.order() > kMaxCanonOrder)
    throw std::invalid_argument("canonical labeling supports order <= 8");
  CanonSearch search(g);
  search.dfs(0, 0, 0);
  Graph out(g.order());
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i)
      if (g.has_edge(search.best_perm[i], search.best_perm[j])) out.add_edge(i, j);
  return out;
}

std::string canonical_form(const Graph& g) { return to_graph6(canonical_graph(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

namespace {

// Grow (n-1)-vertex representatives by one new vertex joined to every choice
// of nonempty neighborhood; every connected graph on n vertices arises this
// way from deleting a non-cut vertex. `single_attach` restricts neighborhoods
// to one vertex, which grows exactly the trees (delete a leaf instead).
std::vector<Graph> grow(const std::vector<Graph>& prev, int n, bool single_attach) {
  std::set<std::string> seen;
  std::vector<std::pair<std::string, Graph>> out;
  for (const Graph& p : prev) {
    for (VertexSet mask = 1; mask < vbit(n - 1); ++mask) {
      if (single_attach && vs_size(mask) != 1) continue;
      Graph g(n);
      for (auto [u, v] : p.edges()) g.add_edge(u, v);
      for (VertexSet m = mask; m; m &= m - 1) g.add_edge(vs_lowest(m), n - 1);
      Graph canon = canonical_graph(g);
      std::string key = to_graph6(canon);
      if (seen.insert(key).second) out.emplace_back(std::move(key), std::move(canon));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> reps;
  reps.reserve(out.size());
  for (auto& [key, graph] : out) reps.push_back(std::move(graph));
  return reps;
}

}  // namespace

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("connected enumeration supports 1 <= n <= 7");
  std::vector<Graph> reps = {Graph(1)};
  for (int k = 2; k <= n; ++k) reps = grow(reps, k, /*single_attach=*/false);
  return reps;
}

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1 || n > kMaxCanonOrder)
    throw std::invalid_argument("tree enumeration supports 1 <= n <= 8");
  std::vector<Graph> reps = {Graph(1)};
  for (int k = 2; k <= n; ++k) reps = grow(reps, k, /*single_attach=*/true);
  return reps;
}

}  // namespace paint
