// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#include "symex/generate.hpp"

#include <algorithm>
#include <set>

#include "symex/errors.hpp"
#include "symex/union_partition.hpp"

namespace symex {

namespace {

void random_tree(Graph& g, int n, Rng& rng) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(order[i], order[uniform(rng, i + 1)]);
  for (int i = 1; i < n; ++i) g.add_edge(order[i], order[uniform(rng, i)]);
}

}  // namespace

LabeledGraph random_bispanning(int n, Rng& rng) {
  if (n < 2) throw DomainError("bispanning graphs need at least two vertices");
  for (;;) {
    LabeledGraph lg;
    for (int v = 0; v < n; ++v) lg.graph.add_vertex("v" + std::to_string(v));
    random_tree(lg.graph, n, rng);
    random_tree(lg.graph, n, rng);
    for (int e = 0; e < lg.graph.num_edges(); ++e) {
      lg.edge_labels.push_back("e" + std::to_string(e));
    }
    auto m = make_graphic(lg);
    if (two_basis_partition(*m).feasible) return lg;
  }
}

Graph random_four_regular(int n, Rng& rng) {
  if (n < 6) throw DomainError("4-regular generator needs n >= 6");
  for (;;) {
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v) {
      for (int k = 0; k < 4; ++k) stubs.push_back(v);
    }
    for (int i = static_cast<int>(stubs.size()) - 1; i > 0; --i) {
      std::swap(stubs[i], stubs[uniform(rng, i + 1)]);
    }
    std::set<std::pair<int, int>> seen;
    bool ok = true;
    Graph g;
    for (int v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v));
    for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
      int a = std::min(stubs[i], stubs[i + 1]);
      int b = std::max(stubs[i], stubs[i + 1]);
      if (a == b || !seen.insert({a, b}).second) ok = false;
      g.add_edge(a, b);
    }
    if (!ok) continue;
    bool triangle = false;
    for (auto [a, b] : seen) {
      for (int c = 0; c < n && !triangle; ++c) {
        triangle = seen.count({std::min(a, c), std::max(a, c)}) &&
                   seen.count({std::min(b, c), std::max(b, c)});
      }
      if (triangle) break;
    }
    if (triangle && forest_rank(g, full_set(g.num_edges())) == n - 1) {
      return g;
    }
  }
}

BasisPair random_walk(const Matroid& m, const BasisPair& start, int steps,
                      const ElemSet& forbidden, Rng& rng) {
  BasisPair cur = start;
  for (int k = 0; k < steps; ++k) {
    std::vector<ExchangeStep> moves;
    for (Elem e : set_difference(cur.first, cur.second)) {
      if (contains(forbidden, e)) continue;
      for (Elem f : set_difference(cur.second, cur.first)) {
        if (contains(forbidden, f)) continue;
        if (is_valid_exchange(m, cur, {e, f})) moves.push_back({e, f});
      }
    }
    if (moves.empty()) break;
    cur = apply_step(cur, moves[uniform(rng, static_cast<int>(moves.size()))]);
  }
  return cur;
}

ElemSet random_forbidden(const Graph& g, const BasisPair& x, Rng& rng) {
  const int k = 1 + uniform(rng, 3);
  std::vector<int> verts;
  while (static_cast<int>(verts.size()) < std::min(k, g.num_vertices)) {
    int v = uniform(rng, g.num_vertices);
    if (std::find(verts.begin(), verts.end(), v) == verts.end()) {
      verts.push_back(v);
    }
  }
  auto inside = [&](int v) {
    return std::find(verts.begin(), verts.end(), v) != verts.end();
  };
  ElemSet cand;
  ElemSet covered = set_union(x.first, x.second);
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edges[e];
    if (inside(u) && inside(v) && contains(covered, e)) cand.push_back(e);
  }
  ElemSet out;
  for (Elem e : cand) {
    if (uniform(rng, 2) == 0) out.push_back(e);
  }
  return out;
}

}  // namespace symex
