#include "paint/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace paint {

std::vector<int> vs_to_vector(VertexSet s) {
  std::vector<int> out;
  for (VertexSet m = s; m; m &= m - 1) out.push_back(vs_lowest(m));
  return out;
}

VertexSet vs_from_vector(const std::vector<int>& ids) {
  VertexSet s = 0;
  for (int v : ids) {
    if (v < 0 || v >= kMaxVertices) throw std::invalid_argument("vertex id out of range");
    s |= vbit(v);
  }
  return s;
}

std::string vs_to_string(VertexSet s) {
  if (!s) return "-";
  std::ostringstream os;
  bool first = true;
  for (VertexSet m = s; m; m &= m - 1) {
    if (!first) os << ' ';
    os << vs_lowest(m);
    first = false;
  }
  return os.str();
}

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("graph order must be in 1..30");
  all_ = (n == kMaxVertices) ? (vbit(kMaxVertices) - 1) : (vbit(n) - 1);
  adj_.assign(n, 0);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
  if (u == v) throw std::invalid_argument("self-loop rejected");
  if (has_edge(u, v)) return;  // duplicates collapse
  adj_[u] |= vbit(v);
  adj_[v] |= vbit(u);
  ++edge_count_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (VertexSet m = adj_[u] & ~(vbit(u + 1) - 1); m; m &= m - 1)
      out.emplace_back(u, vs_lowest(m));
  return out;
}

// ---- structural queries ----------------------------------------------------

namespace {

// vertices reachable from `start` staying inside `within`
VertexSet reach(const Graph& g, int start, VertexSet within) {
  VertexSet seen = vbit(start) & within;
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet m = frontier; m; m &= m - 1) next |= g.neighbors(vs_lowest(m));
    frontier = next & within & ~seen;
    seen |= frontier;
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
  return reach(g, 0, g.vertices()) == g.vertices();
}

bool is_tree(const Graph& g) {
  return is_connected(g) && g.edge_count() == g.order() - 1;
}

bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

bool is_odd_cycle(const Graph& g) { return is_cycle_graph(g) && (g.order() % 2) == 1; }

bool is_path_graph(const Graph& g) {
  if (!is_connected(g) || g.edge_count() != g.order() - 1) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

bool contains_triangle(const Graph& g) {
  for (auto [u, v] : g.edges())
    if (g.neighbors(u) & g.neighbors(v)) return true;
  return false;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  Bipartition parts;
  VertexSet seen = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (vs_contains(seen, s)) continue;
    parts.left |= vbit(s);
    seen |= vbit(s);
    VertexSet frontier = vbit(s);
    bool frontier_left = true;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet m = frontier; m; m &= m - 1) next |= g.neighbors(vs_lowest(m));
      next &= ~seen;
      seen |= next;
      (frontier_left ? parts.right : parts.left) |= next;
      frontier = next;
      frontier_left = !frontier_left;
    }
  }
  for (auto [u, v] : g.edges())
    if (vs_contains(parts.left, u) == vs_contains(parts.left, v)) return std::nullopt;
  return parts;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

std::optional<int> is_complete_bipartite_2n(const Graph& g, int hubs[2]) {
  const int n = g.order() - 2;
  if (n < 1) return std::nullopt;
  // Hubs are two nonadjacent vertices adjacent to everything else; the rest
  // must be mutually nonadjacent.
  for (int u = 0; u < g.order(); ++u) {
    if (g.degree(u) != n) continue;
    for (VertexSet m = ~g.neighbors(u) & g.vertices() & ~(vbit(u + 1) - 1); m; m &= m - 1) {
      const int v = vs_lowest(m);
      const VertexSet leaves = g.vertices() & ~vbit(u) & ~vbit(v);
      if (g.neighbors(u) != leaves || g.neighbors(v) != leaves) continue;
      bool independent = true;
      for (VertexSet lm = leaves; lm && independent; lm &= lm - 1)
        independent = !(g.neighbors(vs_lowest(lm)) & leaves);
      if (!independent) continue;
      if (hubs) hubs[0] = u, hubs[1] = v;
      return n;
    }
  }
  return std::nullopt;
}

CoreResult core(const Graph& g) {
  VertexSet remaining = g.vertices();
  for (;;) {
    VertexSet leaves = 0;
    for (VertexSet m = remaining; m; m &= m - 1) {
      const int v = vs_lowest(m);
      if (vs_size(g.neighbors(v) & remaining) == 1) leaves |= vbit(v);
    }
    if (!leaves) break;
    if (leaves == remaining) {
      // Peeling would erase everything (the remainder is a single edge, or a
      // lone pair in a disconnected input); keep the lowest-labelled vertex
      // so trees core down to the 1-vertex graph.
      remaining = vbit(vs_lowest(remaining));
      break;
    }
    remaining &= ~leaves;
  }
  CoreResult res{remaining, Graph(1), {}};
  res.core_graph = induced_subgraph(g, remaining, &res.labels);
  return res;
}

std::optional<int> core_is_K2n(const Graph& g) {
  return is_complete_bipartite_2n(core(g).core_graph);
}

std::optional<int> core_is_odd_cycle(const Graph& g) {
  const Graph c = core(g).core_graph;
  if (is_odd_cycle(c)) return c.order();
  return std::nullopt;
}

Graph induced_subgraph(const Graph& g, VertexSet keep, std::vector<int>* labels) {
  if (!keep) throw std::invalid_argument("induced subgraph of the empty set");
  std::vector<int> old_ids = vs_to_vector(keep);
  std::vector<int> new_id(g.order(), -1);
  for (std::size_t i = 0; i < old_ids.size(); ++i) new_id[old_ids[i]] = static_cast<int>(i);
  Graph h(static_cast<int>(old_ids.size()));
  for (auto [u, v] : g.edges())
    if (new_id[u] >= 0 && new_id[v] >= 0) h.add_edge(new_id[u], new_id[v]);
  if (labels) *labels = std::move(old_ids);
  return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

// ---- family generators -----------------------------------------------------

Graph make_path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g = make_path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph make_theta(int p, int q, int r) {
  if (!(1 <= p && p <= q && q <= r && q >= 2))
    throw std::invalid_argument("theta needs 1 <= p <= q <= r with q >= 2");
  Graph g(p + q + r - 1);
  int next = 2;
  auto add_branch = [&](int len) {
    int prev = 0;
    for (int i = 1; i < len; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, 1);
  };
  add_branch(p);
  add_branch(q);
  add_branch(r);
  return g;
}

Graph make_K2n(int n) {
  if (n < 1) throw std::invalid_argument("K_{2,n} needs n >= 1");
  Graph g(n + 2);
  for (int x = 2; x < n + 2; ++x) {
    g.add_edge(0, x);
    g.add_edge(1, x);
  }
  return g;
}

Graph make_dumbbell(int m, int k, int n) {
  if (m < 3 || n < 3 || k < 1) throw std::invalid_argument("dumbbell needs cycles >= 3, path >= 1");
  Graph g(m + n + k - 2);
  for (int i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);  // first cycle, junction 0
  int far = 0;
  for (int i = 0; i < k - 1; ++i) {
    g.add_edge(far, m + i);
    far = m + i;
  }
  int prev = far;  // second cycle through the far path end
  for (int i = 0; i < n - 1; ++i) {
    g.add_edge(prev, m + k - 1 + i);
    prev = m + k - 1 + i;
  }
  g.add_edge(prev, far);
  return g;
}

Graph make_tadpole(int m, int n) {
  if (m < 1 || n < 3) throw std::invalid_argument("tadpole needs m >= 1, n >= 3");
  Graph g(m + n - 1);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  int prev = n - 1;
  for (int i = 0; i < m - 1; ++i) {
    g.add_edge(prev, n + i);
    prev = n + i;
  }
  return g;
}

// ---- serialization ---------------------------------------------------------

Graph from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, int>> edge_list;
  std::optional<int> header;
  int max_id = -1;
  int line_no = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    long a, b;
    if (!(ls >> a)) {
      std::string junk;
      if (ls.clear(), ls.str(line), ls >> junk)
        throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": malformed");
      continue;  // blank line
    }
    if (!(ls >> b)) {
      if (!first_content)
        throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                    ": vertex-count header allowed only on the first line");
      if (a < 1 || a > kMaxVertices)
        throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                    ": vertex count must be in 1..30");
      header = static_cast<int>(a);
      first_content = false;
      continue;
    }
    std::string junk;
    if (ls >> junk)
      throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": malformed");
    if (a < 0 || a >= kMaxVertices || b < 0 || b >= kMaxVertices)
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": vertex id out of range 0..29");
    if (a == b)
      throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": self-loop");
    edge_list.emplace_back(static_cast<int>(a), static_cast<int>(b));
    max_id = std::max(max_id, static_cast<int>(std::max(a, b)));
    first_content = false;
  }
  if (!header && max_id < 0) throw std::invalid_argument("edge list is empty");
  const int n = header ? *header : max_id + 1;
  if (max_id >= n) throw std::invalid_argument("edge list mentions a vertex beyond the header count");
  Graph g(n);
  for (auto [u, v] : edge_list) g.add_edge(u, v);
  return g;
}

Graph from_graph6(const std::string& text) {
  std::string s = text;
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  if (s.empty()) throw std::invalid_argument("graph6: empty string");
  std::size_t pos = 0;
  long n;
  if (s[0] == 126) {  // multi-byte vertex counts are always beyond our cap
    throw std::invalid_argument("graph6: vertex count exceeds 30");
  } else {
    if (s[0] < 63 || s[0] > 125) throw std::invalid_argument("graph6: invalid character");
    n = s[0] - 63;
    pos = 1;
  }
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("graph6: vertex count must be in 1..30");
  const long bits = n * (n - 1) / 2;
  const long chunks = (bits + 5) / 6;
  if (static_cast<long>(s.size()) - static_cast<long>(pos) != chunks)
    throw std::invalid_argument("graph6: length mismatch");
  Graph g(static_cast<int>(n));
  long bit = 0;
  for (long c = 0; c < chunks; ++c) {
    const char ch = s[pos + c];
    if (ch < 63 || ch > 126) throw std::invalid_argument("graph6: invalid character");
    const int word = ch - 63;
    for (int k = 5; k >= 0 && bit < bits; --k, ++bit) {
      if (!((word >> k) & 1)) continue;
      // column-major upper triangle: bit index -> pair (i, j), i < j
      long t = bit, j = 1;
      while (t >= j) t -= j, ++j;
      g.add_edge(static_cast<int>(t), static_cast<int>(j));
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(63 + n));
  int word = 0, fill = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      word = (word << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++fill == 6) {
        out.push_back(static_cast<char>(63 + word));
        word = fill = 0;
      }
    }
  }
  if (fill) out.push_back(static_cast<char>(63 + (word << (6 - fill))));
  return out;
}

}  // namespace paint
