#include <queue>
#include <stdexcept>

#include "paint/strategy.hpp"

namespace paint {

Orientation::Orientation(int n) : n_(n), out_(n, 0), in_(n, 0) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("orientation order out of range");
}

void Orientation::add_arc(int from, int to) {
  if (from < 0 || from >= n_ || to < 0 || to >= n_ || from == to)
    throw std::invalid_argument("bad arc");
  out_[from] |= vbit(to);
  in_[to] |= vbit(from);
}

Orientation Orientation::away_from_root(const Graph& tree, int root) {
  if (!is_tree(tree)) throw std::invalid_argument("away_from_root needs a tree");
  if (root < 0 || root >= tree.order()) throw std::invalid_argument("root out of range");
  Orientation d(tree.order());
  std::queue<int> bfs;
  VertexSet seen = vbit(root);
  bfs.push(root);
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int w : vs_to_vector(tree.neighbors(v) & ~seen)) {
      d.add_arc(v, w);
      seen |= vbit(w);
      bfs.push(w);
    }
  }
  return d;
}

Orientation Orientation::directed_cycle(const Graph& cycle) {
  if (!is_cycle_graph(cycle)) throw std::invalid_argument("directed_cycle needs a cycle");
  Orientation d(cycle.order());
  int prev = 0;
  int cur = vs_lowest(cycle.neighbors(0));
  d.add_arc(prev, cur);
  while (cur != 0) {
    int next = vs_lowest(cycle.neighbors(cur) & ~vbit(prev));
    d.add_arc(cur, next);
    prev = cur;
    cur = next;
  }
  return d;
}

namespace {

// Checks the defining properties of a kernel of the sub-digraph on `marked`.
bool is_kernel(const Orientation& d, VertexSet marked, VertexSet u) {
  for (int v : vs_to_vector(u))
    if (d.out(v) & marked & u) return false;  // an arc inside u
  for (int v : vs_to_vector(marked & ~u))
    if (!(d.in(v) & marked & u)) return false;  // not dominated
  return true;
}

}  // namespace

std::optional<VertexSet> kernel_of(const Orientation& d, VertexSet marked) {
  int n = d.order();
  std::vector<int> in_deg(n, 0);
  for (int v : vs_to_vector(marked)) in_deg[v] = vs_size(d.in(v) & marked);

  VertexSet chosen = 0;
  VertexSet pending = marked;
  // Peel sources first, lowest id first; a source joins the kernel unless an
  // in-neighbor already did.
  while (true) {
    int src = -1;
    for (int v : vs_to_vector(pending))
      if (in_deg[v] == 0) {
        src = v;
        break;
      }
    if (src < 0) break;
    if (!(d.in(src) & marked & chosen)) chosen |= vbit(src);
    pending &= ~vbit(src);
    for (int w : vs_to_vector(d.out(src) & pending)) --in_deg[w];
  }

  // Whatever remains has no source: directed cycles. Alternate around each,
  // starting at its lowest vertex; an odd cycle admits no kernel.
  while (pending) {
    int start = vs_lowest(pending);
    std::vector<int> ring;
    VertexSet visited = 0;
    int cur = start;
    while (true) {
      if (vs_contains(visited, cur)) return std::nullopt;  // walk re-entered itself
      ring.push_back(cur);
      visited |= vbit(cur);
      VertexSet next = d.out(cur) & pending;
      if (vs_size(next) != 1) return std::nullopt;
      cur = vs_lowest(next);
      if (cur == start) break;
    }
    if (ring.size() % 2 != 0) return std::nullopt;
    for (size_t i = 0; i < ring.size(); i += 2) chosen |= vbit(ring[i]);
    for (int v : ring) pending &= ~vbit(v);
  }

  if (!is_kernel(d, marked, chosen)) return std::nullopt;
  return chosen;
}

}  // namespace paint
