// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#include "symex/graph.hpp"

#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "symex/errors.hpp"

namespace symex {

DisjointSets::DisjointSets(int n) : parent_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(int x, int y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (y < x) std::swap(x, y);
  parent_[y] = x;
  return true;
}

int Graph::add_vertex(const std::string& name) {
  vertex_names.push_back(name);
  return num_vertices++;
}

int Graph::add_edge(int u, int v) {
  edges.emplace_back(u, v);
  return num_edges() - 1;
}

std::vector<int> Graph::degrees() const {
  return degrees(full_set(num_edges()));
}

std::vector<int> Graph::degrees(const ElemSet& edge_subset) const {
  std::vector<int> d(num_vertices, 0);
  for (Elem e : edge_subset) {
    ++d[edges[e].first];
    ++d[edges[e].second];
  }
  return d;
}

ElemSet Graph::star(int v) const {
  ElemSet s;
  for (int e = 0; e < num_edges(); ++e) {
    if (edges[e].first == v || edges[e].second == v) s.push_back(e);
  }
  return s;
}

std::vector<int> Graph::vertices_of(const ElemSet& edge_subset) const {
  std::set<int> vs;
  for (Elem e : edge_subset) {
    vs.insert(edges[e].first);
    vs.insert(edges[e].second);
  }
  return {vs.begin(), vs.end()};
}

int forest_rank(const Graph& g, const ElemSet& edge_subset) {
  DisjointSets ds(g.num_vertices);
  int r = 0;
  for (Elem e : edge_subset) {
    if (ds.unite(g.edges[e].first, g.edges[e].second)) ++r;
  }
  return r;
}

Graph graph_minor(const Graph& g, const ElemSet& contract, const ElemSet& del) {
  DisjointSets ds(g.num_vertices);
  for (Elem e : contract) ds.unite(g.edges[e].first, g.edges[e].second);
  std::vector<int> new_id(g.num_vertices, -1);
  Graph out;
  for (int v = 0; v < g.num_vertices; ++v) {
    int root = ds.find(v);
    if (new_id[root] < 0) {
      new_id[root] = out.add_vertex(v < static_cast<int>(g.vertex_names.size())
                                        ? g.vertex_names[v]
                                        : std::to_string(v));
    }
    new_id[v] = new_id[root];
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    if (contains(contract, e) || contains(del, e)) continue;
    out.add_edge(new_id[g.edges[e].first], new_id[g.edges[e].second]);
  }
  return out;
}

Graph drop_isolated(const Graph& g) {
  std::vector<int> d = g.degrees();
  std::vector<int> new_id(g.num_vertices, -1);
  Graph out;
  for (int v = 0; v < g.num_vertices; ++v) {
    if (d[v] > 0) new_id[v] = out.add_vertex(g.vertex_names[v]);
  }
  for (const auto& [u, v] : g.edges) out.add_edge(new_id[u], new_id[v]);
  return out;
}

std::vector<BitVec> incidence_rows(const Graph& g) {
  std::vector<BitVec> rows(g.num_vertices, BitVec(g.num_edges()));
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edges[e];
    if (u == v) continue;
    rows[u].set(e);
    rows[v].set(e);
  }
  return rows;
}

LabeledGraph parse_graph_text(const std::string& text) {
  LabeledGraph out;
  std::map<std::string, int> vertex_ids;
  std::set<std::string> seen_labels;
  auto vertex = [&](const std::string& name) {
    auto it = vertex_ids.find(name);
    if (it != vertex_ids.end()) return it->second;
    int id = out.graph.add_vertex(name);
    vertex_ids.emplace(name, id);
    return id;
  };
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 3) {
      throw ParseError("graph line " + std::to_string(line_no) +
                       ": expected `label u v`");
    }
    if (!seen_labels.insert(tok[0]).second) {
      throw ParseError("graph line " + std::to_string(line_no) +
                       ": duplicate edge label " + tok[0]);
    }
    int u = vertex(tok[1]);
    int v = vertex(tok[2]);
    out.graph.add_edge(u, v);
    out.edge_labels.push_back(tok[0]);
  }
  return out;
}

std::string format_graph_text(const Graph& g,
                              const std::vector<std::string>& edge_labels) {
  std::ostringstream out;
  for (int e = 0; e < g.num_edges(); ++e) {
    out << edge_labels[e] << ' ' << g.vertex_name(g.edges[e].first) << ' '
        << g.vertex_name(g.edges[e].second) << '\n';
  }
  return out.str();
}

bool is_simple(const Graph& g) {
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : g.edges) {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second) return false;
  }
  return true;
}

ElemSet tree_path(const Graph& g, const ElemSet& tree_edges, int u, int v) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.num_vertices);
  for (Elem e : tree_edges) {
    auto [a, b] = g.edges[e];
    adj[a].emplace_back(b, e);
    adj[b].emplace_back(a, e);
  }
  std::vector<int> via(g.num_vertices, -2);
  std::vector<int> prev(g.num_vertices, -1);
  std::vector<int> stack{u};
  via[u] = -1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (x == v) break;
    for (auto [y, e] : adj[x]) {
      if (via[y] != -2) continue;
      via[y] = e;
      prev[y] = x;
      stack.push_back(y);
    }
  }
  if (via[v] == -2) return {};
  ElemSet path;
  for (int x = v; x != u; x = prev[x]) path.push_back(via[x]);
  return normalized(std::move(path));
}

}  // namespace symex
