// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#include "symex/special.hpp"

#include <array>

#include "symex/errors.hpp"

namespace symex {

std::string to_string(Mode mode) {
  return mode == Mode::kWhite ? "white" : "gabow";
}

Mode parse_mode(const std::string& text) {
  if (text == "white") return Mode::kWhite;
  if (text == "gabow") return Mode::kGabow;
  throw DomainError("unknown mode '" + text + "'");
}

EvenCycleMatroid::EvenCycleMatroid(Graph g, std::vector<std::string> labels)
    : Matroid(std::move(labels)), graph_(std::move(g)) {
  if (graph_.num_edges() != size()) {
    throw DomainError("edge count does not match labels");
  }
}

int EvenCycleMatroid::rank_impl(const ElemSet& s) const {
  const int n = graph_.num_vertices;
  // Union-find where parity[v] is the colour of v relative to its parent.
  std::vector<int> parent(n), parity(n, 0);
  std::vector<bool> odd(n, false);
  for (int v = 0; v < n; ++v) parent[v] = v;
  auto find = [&](int v) {
    int p = 0;
    while (parent[v] != v) {
      p ^= parity[v];
      v = parent[v];
    }
    return std::pair{v, p};
  };
  for (Elem e : s) {
    auto [u, v] = graph_.edges[e];
    auto [ru, pu] = find(u);
    auto [rv, pv] = find(v);
    if (ru == rv) {
      // Same colour on both ends closes an odd cycle.
      if (pu == pv) odd[ru] = true;
      continue;
    }
    parent[ru] = rv;
    parity[ru] = pu ^ pv ^ 1;
    odd[rv] = odd[rv] || odd[ru];
  }
  int bipartite = 0;
  for (int v = 0; v < n; ++v) {
    if (parent[v] == v && !odd[v]) ++bipartite;
  }
  return n - bipartite;
}

std::vector<std::string> r10_labels() {
  std::vector<std::string> out;
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) {
      out.push_back("v" + std::to_string(i) + "v" + std::to_string(j));
    }
  }
  return out;
}

namespace {

Graph k5() {
  Graph g;
  for (int i = 1; i <= 5; ++i) g.add_vertex("v" + std::to_string(i));
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) g.add_edge(i, j);
  }
  return g;
}

void check_label_count(const std::vector<std::string>& labels, std::size_t n) {
  if (labels.size() != n) {
    throw DomainError("expected " + std::to_string(n) + " labels");
  }
}

}  // namespace

std::shared_ptr<const R10Matroid> r10_construct(
    std::vector<std::string> labels) {
  check_label_count(labels, 10);
  std::vector<BitVec> cols;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      BitVec c(5);
      for (int r = 0; r < 5; ++r) {
        if (r != i && r != j) c.set(r);
      }
      cols.push_back(c);
    }
  }
  return std::make_shared<R10Matroid>(std::move(cols), 5, std::move(labels));
}

std::shared_ptr<const EvenCycleMatroid> r10_even_cycle(
    std::vector<std::string> labels) {
  check_label_count(labels, 10);
  return std::make_shared<EvenCycleMatroid>(k5(), std::move(labels));
}

std::shared_ptr<const FanoMatroid> f7_construct(
    std::vector<std::string> labels) {
  check_label_count(labels, 7);
  // a..g are ids 0..6.
  const std::array<std::array<int, 3>, 7> lines = {{{0, 1, 3},
                                                    {1, 2, 4},
                                                    {0, 2, 5},
                                                    {0, 4, 6},
                                                    {2, 3, 6},
                                                    {1, 5, 6},
                                                    {3, 4, 5}}};
  std::vector<ElemSet> bases;
  for (int a = 0; a < 7; ++a) {
    for (int b = a + 1; b < 7; ++b) {
      for (int c = b + 1; c < 7; ++c) {
        bool line = false;
        for (const auto& l : lines) {
          line = line || (l[0] == a && l[1] == b && l[2] == c);
        }
        if (!line) bases.push_back({a, b, c});
      }
    }
  }
  return std::make_shared<FanoMatroid>(std::move(labels), std::move(bases));
}

std::shared_ptr<const BinaryMatroid> f7_matrix() {
  const unsigned codes[7] = {1, 2, 4, 3, 6, 5, 7};
  std::vector<BitVec> cols;
  for (unsigned c : codes) cols.emplace_back(3, c);
  return std::make_shared<BinaryMatroid>(
      std::move(cols), 3,
      std::vector<std::string>{"a", "b", "c", "d", "e", "f", "g"});
}

Fixture fixture(const std::string& name) {
  Fixture f;
  f.name = name;
  if (name == "k4") {
    f.m = make_graphic(
        parse_graph_text("a 1 2\nb 2 3\nc 3 4\nd 1 3\ne 1 4\nf 2 4\n"));
    f.x = {f.m->find_all({"a", "b", "c"}), f.m->find_all({"d", "e", "f"})};
    f.y = {f.m->find_all({"a", "e", "c"}), f.m->find_all({"d", "b", "f"})};
  } else if (name == "dt") {
    f.m = make_graphic(parse_graph_text("a1 1 2\na2 1 2\nb1 2 3\nb2 2 3\n"));
    f.x = {f.m->find_all({"a1", "b1"}), f.m->find_all({"a2", "b2"})};
    f.y = swapped(f.x);
  } else if (name == "r10") {
    f.m = r10_construct();
    // Two edge-disjoint Hamiltonian cycles of K5.
    f.x = {f.m->find_all({"v1v2", "v2v3", "v3v4", "v4v5", "v1v5"}),
           f.m->find_all({"v1v3", "v1v4", "v2v4", "v2v5", "v3v5"})};
    f.y = swapped(f.x);
  } else if (name == "f7") {
    f.m = f7_construct();
    f.x = {f.m->find_all({"a", "b", "c"}), f.m->find_all({"d", "e", "g"})};
    f.y = swapped(f.x);
  } else {
    throw DomainError("unknown fixture '" + name + "'");
  }
  return f;
}

ExchangeSequence solve_exhaustive(const Instance& inst, Mode mode, int cap) {
  check_instance(inst);
  const bool gabow = mode == Mode::kGabow;
  if (gabow && (!is_disjoint(inst.x) || inst.y != swapped(inst.x))) {
    throw DomainError("gabow mode needs disjoint bases and y = reversed x");
  }
  Solver rec = [&](const Instance& in) -> ExchangeSequence {
    if (in.x == in.y) return {};
    if (!is_covering(in)) {
      return solve_via_reduced(delete_uncovered(in), rec, nullptr);
    }
    if (!is_disjoint(in.x) || !is_disjoint(in.y)) {
      return solve_via_reduced(contract_common(in), rec, nullptr);
    }
    BfsOptions opts;
    opts.forbidden = in.forbidden;
    opts.monotone = gabow;
    opts.cap = cap;
    opts.last = in.last;
    BfsResult r = bfs_oracle(*in.m, in.x, in.y, opts);
    if (!r.reachable) {
      throw InternalError("exhaustive search found no sequence");
    }
    return r.sequence;
  };
  return rec(inst);
}

ExchangeSequence solve_r10(const Instance& inst, Mode mode) {
  if (inst.m->size() != 10 || inst.m->full_rank() != 5) {
    throw DomainError("solve_r10 expects a rank-5 matroid on 10 elements");
  }
  return solve_exhaustive(inst, mode, 10);
}

ExchangeSequence solve_f7(const Instance& inst, Mode mode) {
  if (inst.m->size() != 7 || inst.m->full_rank() != 3) {
    throw DomainError("solve_f7 expects a rank-3 matroid on 7 elements");
  }
  return solve_exhaustive(inst, mode, 7);
}

}  // namespace symex
