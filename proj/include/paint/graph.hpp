#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace paint {

// A set of vertex ids 0..29, one bit per vertex.  Small graphs only, so a
// single machine word is enough and set algebra is plain bit twiddling.
using VertexSet = std::uint32_t;

constexpr int kMaxVertices = 30;

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }
constexpr bool vs_contains(VertexSet s, int v) { return (s >> v) & 1u; }
constexpr int vs_size(VertexSet s) { return std::popcount(s); }
constexpr int vs_lowest(VertexSet s) { return std::countr_zero(s); }

std::vector<int> vs_to_vector(VertexSet s);
VertexSet vs_from_vector(const std::vector<int>& ids);
// Space-separated ascending ids, e.g. "0 2 5".  Empty set -> "-".
std::string vs_to_string(VertexSet s);

// Simple undirected graph on vertices 0..n-1, adjacency stored as one
// VertexSet per vertex.  No self-loops, no multi-edges.
class Graph {
 public:
  explicit Graph(int n);

  int order() const { return n_; }
  int edge_count() const { return edge_count_; }
  VertexSet vertices() const { return all_; }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return vs_size(adj_[v]); }
  bool has_edge(int u, int v) const { return vs_contains(adj_[u], v); }

  void add_edge(int u, int v);
  std::vector<std::pair<int, int>> edges() const;  // sorted (u < v)

  bool operator==(const Graph& other) const = default;

 private:
  int n_;
  int edge_count_ = 0;
  VertexSet all_;
  std::vector<VertexSet> adj_;
};

// ---- structural queries ----------------------------------------------------

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_cycle_graph(const Graph& g);  // connected and 2-regular
bool is_odd_cycle(const Graph& g);
bool is_path_graph(const Graph& g);  // includes the 1-vertex path
bool contains_triangle(const Graph& g);

struct Bipartition {
  VertexSet left = 0;   // contains the lowest vertex of each component
  VertexSet right = 0;
};
// nullopt when g has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

// n when g is a complete bipartite graph with parts {2, n}; the two
// "hub" vertices are returned ascending when hubs != nullptr.
std::optional<int> is_complete_bipartite_2n(const Graph& g, int hubs[2] = nullptr);

// Iterated removal of degree-1 vertices.  If the process would erase the
// whole graph (it ends on a single edge), the lower-labelled endpoint is kept
// so that every tree has the 1-vertex graph as its core.
struct CoreResult {
  VertexSet core_vertices = 0;    // in the labels of the input graph
  Graph core_graph;               // induced subgraph, relabelled 0..k-1
  std::vector<int> labels;        // core_graph vertex i was labels[i] in g
};
CoreResult core(const Graph& g);
std::optional<int> core_is_K2n(const Graph& g);        // n of K_{2,n}, n >= 2
std::optional<int> core_is_odd_cycle(const Graph& g);  // cycle length

// keep must be nonempty; vertices are relabelled 0..k-1 in ascending order of
// their old ids (old ids reported via *labels when requested).
Graph induced_subgraph(const Graph& g, VertexSet keep, std::vector<int>* labels = nullptr);
Graph disjoint_union(const Graph& a, const Graph& b);

// ---- family generators -----------------------------------------------------
//
// Canonical labellings (also documented in README.md):
//   make_path(n):     0-1-...-(n-1)
//   make_cycle(n):    0-1-...-(n-1)-0, n >= 3
//   make_theta(p,q,r): hubs u=0, v=1 joined by three internally disjoint
//       paths with p, q, r EDGES (p <= q <= r, p >= 1, q >= 2); internal
//       vertices of the p-path are 2..p, then the q-path, then the r-path.
//   make_K2n(n):      hubs 0,1; leaves 2..n+1
//   make_dumbbell(m,k,n): two cycles joined by a path with k VERTICES
//       (k = 1 means the cycles share one vertex).  C_m is 0..m-1 with the
//       junction at 0; the path continues m..m+k-2; the second cycle closes
//       through the far path end.  Order m+n+k-2.
//   make_tadpole(m,n): cycle 0..n-1 plus a pendant path of m vertices total,
//       sharing cycle vertex n-1; the free path end is n+m-2.  m = 1 yields
//       the bare cycle.  Order m+n-1.
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_theta(int p, int q, int r);
Graph make_K2n(int n);
Graph make_dumbbell(int m, int k, int n);
Graph make_tadpole(int m, int n);

// ---- serialization ---------------------------------------------------------

// Text edge lists: one "u v" pair per line, optionally preceded by a line
// holding the vertex count (needed to represent isolated vertices).
// Duplicate edges collapse; malformed lines, ids >= 30 and self-loops throw.
Graph from_edge_list(const std::string& text);

// Standard graph6 encoding; the optional ">>graph6<<" header is tolerated.
Graph from_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

}  // namespace paint
