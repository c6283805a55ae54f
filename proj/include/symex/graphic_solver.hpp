// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SYMEX_GRAPHIC_SOLVER_HPP_
#define SYMEX_GRAPHIC_SOLVER_HPP_

#include <optional>

#include "symex/reductions.hpp"

namespace symex {

enum class VertexKind { kDegree2, kDegree3 };

struct ReductionVertex {
  int vertex = -1;
  VertexKind kind = VertexKind::kDegree2;
};

// Smallest degree-2 vertex, else the smallest degree-3 vertex whose star
// avoids `avoid` and is a bond.
std::optional<ReductionVertex> pick_reduction_vertex(const GraphicMatroid& m,
                                                     const ElemSet& avoid);

// Number of vertices touched by the edges of `s`.
int vertex_span(const Graph& g, const ElemSet& s);

// inst.m must be a GraphicMatroid. Throws DomainError when |V(F)| > 3.
ExchangeSequence solve_graphic_white(const Instance& inst,
                                     ReductionTrace* trace = nullptr);

// Reverses a bispanning pair in exactly r monotone steps; the last one uses
// h when given.
ExchangeSequence solve_graphic_gabow(const GraphicMatroid& m,
                                     const BasisPair& x,
                                     std::optional<Elem> h = std::nullopt,
                                     ReductionTrace* trace = nullptr);

}  // namespace symex

#endif  // SYMEX_GRAPHIC_SOLVER_HPP_
