// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#include "symex/graphic_solver.hpp"

#include "symex/errors.hpp"

namespace symex {

namespace {

const GraphicMatroid& as_graphic(const Instance& inst) {
  auto g = dynamic_cast<const GraphicMatroid*>(inst.m.get());
  if (!g) throw DomainError("graphic solver needs a graphic matroid");
  return *g;
}

ExchangeSequence solve_rec(const Instance& inst, ReductionTrace* trace) {
  if (inst.x == inst.y) return {};
  Solver rec = [trace](const Instance& child) {
    return solve_rec(child, trace);
  };
  if (!is_covering(inst)) {
    return solve_via_reduced(delete_uncovered(inst), rec, trace);
  }
  if (!is_disjoint(inst.x)) {
    return solve_via_reduced(contract_common(inst), rec, trace);
  }
  if (inst.m->full_rank() <= 2) return solve_rank_le2(inst);
  const GraphicMatroid& gm = as_graphic(inst);
  ElemSet avoid = inst.forbidden;
  if (inst.last) avoid = with(avoid, *inst.last);
  if (auto v = pick_reduction_vertex(gm, avoid)) {
    ElemSet star = gm.graph().star(v->vertex);
    if (v->kind == VertexKind::kDegree2) {
      return solve_via_tight(inst, set_difference(gm.ground(), star), rec,
                             trace);
    }
    return solve_via_triad(inst, star, false, rec, trace);
  }
  if (auto z = find_nontrivial_tight_set(gm, inst.x)) {
    return solve_via_tight(inst, *z, rec, trace);
  }
  throw InternalError("graphic instance admits no reduction");
}

}  // namespace

int vertex_span(const Graph& g, const ElemSet& s) {
  return static_cast<int>(g.vertices_of(s).size());
}

std::optional<ReductionVertex> pick_reduction_vertex(const GraphicMatroid& m,
                                                     const ElemSet& avoid) {
  const Graph& g = m.graph();
  std::vector<int> deg = g.degrees();
  for (int v = 0; v < g.num_vertices; ++v) {
    if (deg[v] == 2) return ReductionVertex{v, VertexKind::kDegree2};
  }
  for (int v = 0; v < g.num_vertices; ++v) {
    if (deg[v] != 3) continue;
    ElemSet star = g.star(v);
    if (star.size() != 3 || !disjoint(star, avoid)) continue;
    if (is_triad(m, star)) return ReductionVertex{v, VertexKind::kDegree3};
  }
  return std::nullopt;
}

ExchangeSequence solve_graphic_white(const Instance& inst,
                                     ReductionTrace* trace) {
  const GraphicMatroid& gm = as_graphic(inst);
  check_instance(inst);
  if (vertex_span(gm.graph(), inst.forbidden) > 3) {
    throw DomainError("forbidden edges span more than three vertices");
  }
  return solve_rec(inst, trace);
}

ExchangeSequence solve_graphic_gabow(const GraphicMatroid& m,
                                     const BasisPair& x, std::optional<Elem> h,
                                     ReductionTrace* trace) {
  if (!is_disjoint(x) ||
      static_cast<int>(x.first.size() + x.second.size()) != m.size() ||
      !is_basis_pair(m, x)) {
    throw DomainError("reversal needs a bispanning pair of disjoint bases");
  }
  if (h && (*h < 0 || *h >= m.size())) {
    throw DomainError("last-step element outside the ground set");
  }
  Instance inst{std::static_pointer_cast<const Matroid>(m.shared_from_this()),
                x,
                swapped(x),
                {},
                h};
  return solve_rec(inst, trace);
}

}  // namespace symex
