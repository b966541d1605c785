#pragma once

#include <string>
#include <vector>

#include "paint/graph.hpp"

namespace paint {

// Exact-isomorphism utilities. All of these search over vertex relabelings,
// so they are restricted to small orders.
inline constexpr int kMaxCanonOrder = 8;

// The lexicographically smallest graph6 encoding of g over all relabelings.
// Equal strings <=> isomorphic graphs. Throws for order > kMaxCanonOrder.
std::string canonical_form(const Graph& g);

// The relabeled graph realizing canonical_form(g).
Graph canonical_graph(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// Every connected graph on n vertices up to isomorphism (1 <= n <= 7),
// canonically labelled, sorted by graph6 form.
std::vector<Graph> enumerate_connected_graphs(int n);

// Every tree on n vertices up to isomorphism (1 <= n <= 8).
std::vector<Graph> enumerate_trees(int n);

}  // namespace paint
