// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SYMEX_SUM_COMPOSITION_HPP_
#define SYMEX_SUM_COMPOSITION_HPP_

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "symex/errors.hpp"
#include "symex/exchange.hpp"
#include "symex/graph.hpp"
#include "symex/reductions.hpp"
#include "symex/sums.hpp"

namespace symex {

// ---- 2-sums ---------------------------------------------------------------

// The two part instances of a disjoint covering instance on a 2-sum. The
// shared element t is added to whichever side it completes to a basis.
struct TwoSumInstances {
  std::array<Instance, 2> part;
};

// Requires a 2-sum, disjoint covering pairs, and no tight set made of one
// part's elements (otherwise InternalError). inst.last, when set, is
// requested as the last step on its own side, and t as the last step on
// the other side, so that the merge can keep it last.
TwoSumInstances split_2sum(const SumMatroid& m, const Instance& inst);

// Replays both part sequences in M. Steps that use t are paired into
// single exchanges while both sides still have some; afterwards the side
// without t-steps finishes and the other side substitutes for t an element
// e that is exchangeable with t in the finished side's final pair.
ExchangeSequence merge_2sum(const SumMatroid& m, const TwoSumInstances& sub,
                            const ExchangeSequence& seq0,
                            const ExchangeSequence& seq1);

// ---- 3-sums ---------------------------------------------------------------

// A 3-sum seen as M_circ (+)_3 M_bullet. t[i] are the ids of t_1, t_2, t_3
// in each part, in the current labelling.
struct ThreeSumContext {
  std::shared_ptr<const SumMatroid> sum;
  int circ = 0;
  int bullet = 1;
  std::array<Elem, 3> t_circ{};
  std::array<Elem, 3> t_bullet{};

  const Matroid& circ_part() const { return *sum->part(circ); }
  const Matroid& bullet_part() const { return *sum->part(bullet); }
  // Reorders t so that new t_i is old t_{order[i]}.
  ThreeSumContext relabeled(const std::array<int, 3>& order) const;
};

ThreeSumContext make_three_sum_context(std::shared_ptr<const SumMatroid> sum,
                                       int bullet);

// Type 1 when |Z_circ,1| = r(M_circ) - 2, type 2 when it is r(M_circ) - 1.
// i, j, k are 0-based: t_i and t_j complete the tested circ-side set to a
// basis of M_circ, t_i and t_k complete the bullet-side set.
struct PairType {
  int type = 0;
  int i = -1;
  int j = -1;
  int k = -1;
};

// Throws InternalError when z is not a disjoint basis pair of the sum in
// the expected shape.
PairType classify_pair(const ThreeSumContext& ctx, const BasisPair& z);

// Partition of E - T into a basis of M and a basis of M/T. Requires
// |E| = 2 r(E) + 1 (DomainError otherwise); when the union is infeasible
// the result carries the violating set instead.
struct TriangleSplit {
  bool feasible = false;
  ElemSet basis;             // basis of M
  ElemSet contracted_basis;  // basis of M/T
  ElemSet witness;           // r(Z) + r_{M/T}(Z) < |Z| when infeasible
};
TriangleSplit triangle_split_partition(const Matroid& m, const ElemSet& t);

// The sparsity precondition |(E - T)[U]| <= 2|U| - 3 failed on `witness`.
class SparsityError : public DomainError {
 public:
  SparsityError(const std::string& what, std::vector<int> witness)
      : DomainError(what), witness_(std::move(witness)) {}
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::vector<int> witness_;
};

// Vertex set U with |(E - T)[U]| > 2|U| - 3 and |U| >= 2, if any.
std::optional<std::vector<int>> sparsity_violation(const Graph& g,
                                                   const ElemSet& t);

struct RegularPartition {
  ElemSet f1;
  ElemSet f2;
  Elem e = -1;
};

// t = (t1, t2, t3) as edge ids of a triangle in a simple 4-regular graph;
// v1 is the triangle vertex not on t1. Throws SparsityError when the
// precondition fails and DomainError when g or t have the wrong shape.
RegularPartition regular_triangle_partition(const Graph& g,
                                            const std::array<Elem, 3>& t);
// Chooses t1 opposite the smallest-id triangle vertex.
RegularPartition regular_triangle_partition(const Graph& g, const ElemSet& t);

// Requires disjoint covering compatible pairs, no forbidden set, a simple
// 4-regular graphic bullet side and no nontrivial tight set in M. The
// recursive callback solves white instances on the minor M_circ / t1.
ExchangeSequence solve_3sum_white(const ThreeSumContext& ctx,
                                  const Instance& inst, const Solver& recurse,
                                  ReductionTrace* trace = nullptr);

// Reverses a disjoint covering pair in exactly r monotone steps. The
// callback must return monotone reversals (honouring Instance::last).
// inst.last is supported when it lies on the circ side.
ExchangeSequence solve_3sum_gabow(const ThreeSumContext& ctx,
                                  const Instance& inst, const Solver& recurse,
                                  ReductionTrace* trace = nullptr);

// True when the part is graphic on a simple 4-regular graph.
bool is_four_regular_graphic(const Matroid& m);

}  // namespace symex

#endif  // SYMEX_SUM_COMPOSITION_HPP_
