// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#include "symex/tree_gen.hpp"

#include <algorithm>
#include <array>

#include "symex/errors.hpp"
#include "symex/special.hpp"
#include "symex/sum_composition.hpp"
#include "symex/union_partition.hpp"

namespace symex {

namespace {

std::vector<std::string> prefixed(const std::string& pre, int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(pre + std::to_string(i));
  return out;
}

MatroidPtr graphic(const Graph& g, std::vector<std::string> labels) {
  return std::make_shared<GraphicMatroid>(g, std::move(labels));
}

bool is_bridge(const Graph& g, Elem e) {
  ElemSet rest = without(full_set(g.num_edges()), e);
  return forest_rank(g, rest) < forest_rank(g, full_set(g.num_edges()));
}

// Joins the components of `g` (tracked by ds) with random extra edges.
void connect_randomly(Graph& g, DisjointSets& ds, int& comps, Rng& rng) {
  const int n = g.num_vertices;
  while (comps > 1) {
    int u = uniform(rng, n), v = uniform(rng, n);
    if (ds.find(u) == ds.find(v)) continue;
    ds.unite(u, v);
    g.add_edge(u, v);
    --comps;
  }
}

Graph k4_graph() {
  return parse_graph_text("a 1 2\nb 2 3\nc 3 4\nd 1 3\ne 1 4\nf 2 4\n").graph;
}

MatroidPtr k4_with(const std::string& pre,
                   const std::vector<std::pair<int, std::string>>& shared) {
  std::vector<std::string> labels = prefixed(pre, 6);
  for (const auto& [e, l] : shared) labels[e] = l;
  return graphic(k4_graph(), labels);
}

}  // namespace

DecompositionTree random_two_sum_star(int leaves, Rng& rng) {
  for (;;) {
    LabeledGraph root = random_bispanning(3 + leaves + uniform(rng, 4), rng);
    std::vector<std::string> root_labels =
        prefixed("r.e", root.graph.num_edges());
    std::vector<Elem> order(root.graph.num_edges());
    for (int i = 0; i < static_cast<int>(order.size()); ++i) order[i] = i;
    for (int i = static_cast<int>(order.size()) - 1; i > 0; --i) {
      std::swap(order[i], order[uniform(rng, i + 1)]);
    }
    if (static_cast<int>(order.size()) < leaves) continue;
    DecompositionTree tree;
    tree.nodes.push_back({"root", "graphic", nullptr});
    bool bad = false;
    for (int k = 0; k < leaves; ++k) {
      const std::string s = "s" + std::to_string(k);
      const std::string pre = "l" + std::to_string(k) + ".";
      const std::string id = "leaf" + std::to_string(k);
      root_labels[order[k]] = s;
      const int kind = uniform(rng, 3);
      if (kind == 0) {
        LabeledGraph g = random_bispanning(3 + uniform(rng, 5), rng);
        std::vector<std::string> labels =
            prefixed(pre + "e", g.graph.num_edges());
        labels[uniform(rng, g.graph.num_edges())] = s;
        tree.nodes.push_back({id, "graphic", graphic(g.graph, labels)});
      } else if (kind == 1) {
        std::vector<std::string> labels = r10_labels();
        for (auto& l : labels) l = pre + l;
        labels[uniform(rng, 10)] = s;
        tree.nodes.push_back({id, "r10", r10_construct(labels)});
      } else {
        // F7 has one element too many; a graphic leaf one short fixes it.
        const std::string u = "u" + std::to_string(k);
        std::vector<std::string> labels;
        for (char c = 'a'; c <= 'g'; ++c) labels.push_back(pre + c);
        labels[0] = s;
        labels[1] = u;
        tree.nodes.push_back({id, "f7", f7_construct(labels)});
        LabeledGraph g = random_bispanning(3 + uniform(rng, 4), rng);
        g.graph.edges.pop_back();
        std::vector<Elem> ok;
        for (Elem e = 0; e < g.graph.num_edges(); ++e) {
          if (!is_bridge(g.graph, e)) ok.push_back(e);
        }
        if (ok.empty()) {
          bad = true;
          break;
        }
        std::vector<std::string> nl =
            prefixed("n" + std::to_string(k) + ".e", g.graph.num_edges());
        nl[ok[uniform(rng, static_cast<int>(ok.size()))]] = u;
        const std::string nid = "tail" + std::to_string(k);
        tree.nodes.push_back({nid, "graphic", graphic(g.graph, nl)});
        tree.sums.push_back({id, nid, 2, {u}});
      }
      tree.sums.push_back({"root", id, 2, {s}});
    }
    if (bad) continue;
    tree.nodes[0].m = graphic(root.graph, root_labels);
    // Children are composed in the order of `sums`; keep root edges first.
    std::stable_partition(tree.sums.begin(), tree.sums.end(),
                          [](const TreeSum& t) { return t.a == "root"; });
    try {
      compose_tree(tree);
    } catch (const CompositionError&) {
      continue;
    }
    return tree;
  }
}

DecompositionTree random_three_sum_star(int leaves, Rng& rng) {
  for (;;) {
    const int n = 3 * leaves + 1 + uniform(rng, 3);
    Graph root;
    for (int v = 0; v < n; ++v) root.add_vertex("r" + std::to_string(v));
    // planted[i] holds the sides of triangle i opposite its vertices 2, 0
    // and 1. The first tree takes two sides, the second tree the third.
    std::vector<std::array<Elem, 3>> planted(leaves);
    DisjointSets d1(n);
    int c1 = n;
    for (int i = 0; i < leaves; ++i) {
      planted[i][0] = root.add_edge(3 * i, 3 * i + 1);
      planted[i][1] = root.add_edge(3 * i + 1, 3 * i + 2);
      d1.unite(3 * i, 3 * i + 1);
      d1.unite(3 * i + 1, 3 * i + 2);
      c1 -= 2;
    }
    connect_randomly(root, d1, c1, rng);
    DisjointSets d2(n);
    int c2 = n;
    for (int i = 0; i < leaves; ++i) {
      planted[i][2] = root.add_edge(3 * i, 3 * i + 2);
      d2.unite(3 * i, 3 * i + 2);
      --c2;
    }
    connect_randomly(root, d2, c2, rng);
    std::vector<std::string> labels = prefixed("r.e", root.num_edges());
    DecompositionTree tree;
    tree.nodes.push_back({"root", "graphic", nullptr});
    std::vector<std::vector<std::string>> tri_labels(leaves);
    for (int i = 0; i < leaves; ++i) {
      for (int s = 0; s < 3; ++s) {
        tri_labels[i].push_back("s" + std::to_string(i) + "." +
                                std::to_string(s));
        labels[planted[i][s]] = tri_labels[i][s];
      }
    }
    tree.nodes[0].m = graphic(root, labels);
    for (int i = 0; i < leaves; ++i) {
      Graph g;
      ElemSet tri;
      do {
        g = random_four_regular(6 + uniform(rng, 5), rng);
        tri.clear();
        for (Elem a = 0; a < g.num_edges() && tri.empty(); ++a) {
          for (Elem b = a + 1; b < g.num_edges() && tri.empty(); ++b) {
            for (Elem c = b + 1; c < g.num_edges() && tri.empty(); ++c) {
              if (g.vertices_of({a, b, c}).size() == 3 &&
                  !sparsity_violation(g, {a, b, c})) {
                tri = {a, b, c};
              }
            }
          }
        }
      } while (tri.empty());
      std::vector<std::string> gl =
          prefixed("q" + std::to_string(i) + ".e", g.num_edges());
      for (int s = 0; s < 3; ++s) gl[tri[s]] = tri_labels[i][s];
      const std::string id = "leaf" + std::to_string(i);
      tree.nodes.push_back({id, "graphic", graphic(g, gl)});
      tree.sums.push_back({"root", id, 3, tri_labels[i]});
    }
    try {
      compose_tree(tree);
    } catch (const CompositionError&) {
      continue;
    }
    return tree;
  }
}

std::vector<std::pair<std::string, DecompositionTree>> small_trees() {
  std::vector<std::pair<std::string, DecompositionTree>> out;
  {
    DecompositionTree t;
    t.nodes.push_back({"a", "graphic", k4_with("a", {{0, "s"}})});
    t.nodes.push_back({"b", "graphic", k4_with("b", {{2, "s"}})});
    t.sums.push_back({"a", "b", 2, {"s"}});
    out.push_back({"k4+k4", t});
  }
  const Graph k4e =
      parse_graph_text("a 1 2\nb 2 3\nc 3 4\nd 1 3\ne 1 4\n").graph;
  {
    DecompositionTree t;
    t.nodes.push_back(
        {"fano", "f7",
         f7_construct({"s", "fb", "fc", "fd", "fe", "ff", "fg"})});
    t.nodes.push_back(
        {"k4e", "graphic", graphic(k4e, {"s", "k1", "k2", "k3", "k4"})});
    t.sums.push_back({"fano", "k4e", 2, {"s"}});
    out.push_back({"f7+k4-e", t});
  }
  {
    DecompositionTree t;
    std::vector<std::string> rl = r10_labels();
    rl[0] = "s";
    t.nodes.push_back({"r10", "r10", r10_construct(rl)});
    t.nodes.push_back({"k4", "graphic", k4_with("k", {{3, "s"}})});
    t.sums.push_back({"r10", "k4", 2, {"s"}});
    out.push_back({"r10+k4", t});
  }
  {
    DecompositionTree t;
    t.nodes.push_back({"a", "graphic", k4_with("a", {{0, "s1"}})});
    t.nodes.push_back({"b", "graphic", k4_with("b", {{1, "s1"}, {3, "s2"}})});
    t.nodes.push_back({"c", "graphic", k4_with("c", {{5, "s2"}})});
    t.sums.push_back({"a", "b", 2, {"s1"}});
    t.sums.push_back({"b", "c", 2, {"s2"}});
    out.push_back({"k4-chain", t});
  }
  {
    DecompositionTree t;
    t.nodes.push_back(
        {"fano", "f7",
         f7_construct({"s1", "s2", "fc", "fd", "fe", "ff", "fg"})});
    t.nodes.push_back(
        {"k4e", "graphic", graphic(k4e, {"s1", "k1", "k2", "k3", "k4"})});
    t.nodes.push_back({"k4", "graphic", k4_with("c", {{2, "s2"}})});
    t.sums.push_back({"fano", "k4e", 2, {"s1"}});
    t.sums.push_back({"fano", "k4", 2, {"s2"}});
    out.push_back({"f7+k4-e+k4", t});
  }
  {
    DecompositionTree t;
    t.nodes.push_back(
        {"wheel", "graphic",
         make_graphic(parse_graph_text(
             "t1 2 3\nt2 1 3\nt3 1 2\nw14 1 4\nw15 1 5\nw34 3 4\nw45 4 5\n"
             "w52 5 2\n"))});
    t.nodes.push_back(
        {"oct", "graphic",
         make_graphic(parse_graph_text(
             "t3 1 2\nt2 1 3\no14 1 4\no15 1 5\nt1 2 3\no25 2 5\no26 2 6\n"
             "o34 3 4\no36 3 6\no45 4 5\no46 4 6\no56 5 6\n"))});
    t.sums.push_back({"wheel", "oct", 3, {"t1", "t2", "t3"}});
    out.push_back({"wheel+octahedron", t});
  }
  return out;
}

std::optional<ComposedInstance> make_composed_instance(
    const std::string& name, const DecompositionTree& tree) {
  MatroidPtr m = compose_tree(tree);
  UnionPartition u = two_basis_partition(*m);
  if (!u.feasible) return std::nullopt;
  return ComposedInstance{name, tree, m, {u.first, u.second}};
}

}  // namespace symex
