// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SYMEX_GRAPH_HPP_
#define SYMEX_GRAPH_HPP_

#include <string>
#include <utility>
#include <vector>

#include "symex/elements.hpp"
#include "symex/gf2.hpp"

namespace symex {

class DisjointSets {
 public:
  explicit DisjointSets(int n);
  int find(int x);
  // Returns false when x and y were already joined.
  bool unite(int x, int y);

 private:
  std::vector<int> parent_;
};

// Undirected multigraph; edge i joins edges[i].first and edges[i].second.
// Loops and parallel edges are allowed.
struct Graph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> vertex_names;

  int num_edges() const { return static_cast<int>(edges.size()); }
  int add_vertex(const std::string& name);
  int add_edge(int u, int v);
  const std::string& vertex_name(int v) const { return vertex_names[v]; }

  // Endpoint count per vertex, a loop counting twice.
  std::vector<int> degrees() const;
  std::vector<int> degrees(const ElemSet& edge_subset) const;
  // Edge ids incident to v (loops listed once).
  ElemSet star(int v) const;
  // Vertices touched by the given edges.
  std::vector<int> vertices_of(const ElemSet& edge_subset) const;
};

// Number of edges in a maximal forest of the subgraph.
int forest_rank(const Graph& g, const ElemSet& edge_subset);

// Contracts and deletes edges; surviving edges keep their relative order.
// Vertices are renumbered by the smallest original vertex in each class.
Graph graph_minor(const Graph& g, const ElemSet& contract, const ElemSet& del);

// Removes vertices with no incident edge.
Graph drop_isolated(const Graph& g);

// Vertex-edge incidence matrix over GF(2), one row per vertex.
std::vector<BitVec> incidence_rows(const Graph& g);

// Graph text format: one edge per line, `label u v`; `#` starts a comment.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> edge_labels;
};
LabeledGraph parse_graph_text(const std::string& text);
std::string format_graph_text(const Graph& g,
                              const std::vector<std::string>& edge_labels);

// True when the graph has no loops and no parallel edges.
bool is_simple(const Graph& g);

// Edge ids of the tree path between u and v inside the forest `tree_edges`,
// or an empty set when they are not connected.
ElemSet tree_path(const Graph& g, const ElemSet& tree_edges, int u, int v);

}  // namespace symex

#endif  // SYMEX_GRAPH_HPP_
