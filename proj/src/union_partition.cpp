// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#include "symex/union_partition.hpp"

#include <array>
#include <deque>

#include "symex/errors.hpp"

namespace symex {

UnionPartition matroid_union_partition(const Matroid& m1, const Matroid& m2,
                                       const ElemSet& target) {
  if (m1.size() != m2.size()) {
    throw DomainError("union partition needs a common ground set");
  }
  ElemSet tgt = normalized(target);
  for (Elem e : tgt) {
    if (e < 0 || e >= m1.size()) throw DomainError("target outside ground set");
  }
  const std::array<const Matroid*, 2> ms = {&m1, &m2};
  std::array<ElemSet, 2> part;
  const int n = m1.size();
  std::vector<int> owner(n, -1);

  for (Elem x : tgt) {
    // Node u with pending destination; parent links rebuild the path.
    std::vector<int> parent(n, -2);
    std::vector<int> into(n, -1);  // part the node moves into along the path
    std::deque<Elem> queue{x};
    parent[x] = -1;
    Elem sink = -1;
    int sink_part = -1;
    while (!queue.empty() && sink < 0) {
      Elem u = queue.front();
      queue.pop_front();
      for (int i = 0; i < 2 && sink < 0; ++i) {
        if (owner[u] == i) continue;
        ElemSet plus = with(part[i], u);
        if (ms[i]->is_independent(plus)) {
          sink = u;
          sink_part = i;
          break;
        }
        for (Elem y : part[i]) {
          if (parent[y] != -2) continue;
          if (ms[i]->is_independent(without(plus, y))) {
            parent[y] = u;
            into[y] = i;  // u enters part i, displacing y
            queue.push_back(y);
          }
        }
      }
    }
    if (sink < 0) {
      UnionPartition out;
      for (Elem e = 0; e < n; ++e) {
        if (parent[e] != -2) out.witness.push_back(e);
      }
      return out;
    }
    // Walk back: sink enters sink_part; every displaced node's displacer
    // enters the part it was displaced from.
    Elem cur = sink;
    int dest = sink_part;
    while (cur >= 0) {
      if (owner[cur] >= 0) part[owner[cur]] = without(part[owner[cur]], cur);
      part[dest] = with(part[dest], cur);
      Elem prev = parent[cur];
      int prev_dest = into[cur];
      owner[cur] = dest;
      cur = prev;
      dest = prev_dest;
    }
  }
  UnionPartition out;
  out.feasible = true;
  out.first = part[0];
  out.second = part[1];
  return out;
}

UnionPartition two_basis_partition(const Matroid& m) {
  UnionPartition p = matroid_union_partition(m, m, m.ground());
  if (p.feasible && (!m.is_basis(p.first) || !m.is_basis(p.second))) {
    p.feasible = false;
    p.witness = m.ground();
  }
  return p;
}

}  // namespace symex
