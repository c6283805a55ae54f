// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SYMEX_REDUCTIONS_HPP_
#define SYMEX_REDUCTIONS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symex/exchange.hpp"
#include "symex/matroid.hpp"

namespace symex {

// One reconfiguration problem: transform x into y without touching
// `forbidden`, optionally using `last` in the final step.
struct Instance {
  MatroidPtr m;
  BasisPair x;
  BasisPair y;
  ElemSet forbidden;
  std::optional<Elem> last;
};

enum class ReductionKind {
  kDeleteUncovered,
  kContractCommon,
  kTightSplit,
  kTriad,
  kTriangle,
  kConsistencyFix,
  kTwoSum,
  kThreeSum,
};

std::string to_string(ReductionKind kind);

struct ReductionCertificate {
  ReductionKind kind;
  // Labels of the payload elements (Z, T, or removed elements).
  std::vector<std::string> elements;
  int parent_size = 0;
  int parent_rank = 0;
};

using ReductionTrace = std::vector<ReductionCertificate>;

// A child instance with the map from child ids to parent ids.
struct Reduced {
  Instance child;
  std::vector<Elem> to_parent;
  ReductionCertificate cert;
};

// Throws DomainError when a pair is not a basis pair, h or F are out of
// range, or F is not contained in (X1 & Y1) | (X2 & Y2); IncompatibleError
// for incompatible pairs.
void check_instance(const Instance& inst);

bool is_covering(const Instance& inst);
bool is_disjoint(const BasisPair& p);

Reduced delete_uncovered(const Instance& inst);
Reduced contract_common(const Instance& inst);
ExchangeSequence lift(const Reduced& r, const ExchangeSequence& child_seq);

bool is_tight(const Matroid& m, const ElemSet& z);
// Lexicographically smallest sink component of the fundamental-circuit
// digraph other than E; requires E = X1 + X2 with both bases.
std::optional<ElemSet> find_nontrivial_tight_set(const Matroid& m,
                                                 const BasisPair& x);

struct TightSplit {
  Reduced inner;            // on M|Z
  Reduced outer;            // on M/Z
  bool inner_last = false;  // the designated last element lies in Z
};

TightSplit split_on_tight_set(const Instance& inst, const ElemSet& z);
ExchangeSequence lift_tight(const TightSplit& split,
                            const ExchangeSequence& inner,
                            const ExchangeSequence& outer);

bool is_triad(const Matroid& m, const ElemSet& t);
bool is_triangle(const Matroid& m, const ElemSet& t);
// First 3-subset of cover - avoid in lexicographic order, or none.
std::optional<ElemSet> find_triad(const Matroid& m, const ElemSet& cover,
                                  const ElemSet& avoid = {});
std::optional<ElemSet> find_triangle(const Matroid& m, const ElemSet& cover,
                                     const ElemSet& avoid = {});

bool consistent_on(const BasisPair& x, const BasisPair& y, const ElemSet& t);

struct ConsistencyFix {
  std::optional<ExchangeStep> step_x;  // x -> x'
  std::optional<ExchangeStep> step_y;  // y -> y'; replayed reversed
  BasisPair x;
  BasisPair y;
};

// Requires disjoint pairs and T a triad of m (or, with E = X1 + X2, a
// triangle). Chooses the fewest steps, then the lexicographically first.
ConsistencyFix make_consistent_on_triad(const Matroid& m, const BasisPair& x,
                                        const BasisPair& y, const ElemSet& t);

struct TriadReduction {
  Reduced reduced;
  Elem t1 = -1, t2 = -1, t3 = -1;  // parent ids
  bool dual = false;               // triangle handled as a triad of the dual
};

// Requires consistency on T and T & X1 = {t1, t2}.
// The child is M/t2\t3 (or M\t2/t3 when `dual`).
TriadReduction reduce_triad(const Instance& inst, const ElemSet& t,
                            bool dual = false);
ExchangeSequence lift_triad(const Instance& parent, const TriadReduction& r,
                            const ExchangeSequence& child_seq);

// Exhaustive search for rank <= 2: width <= 1, length <= r, last step
// uses inst.last when set. Throws InternalError if no such sequence exists.
ExchangeSequence solve_rank_le2(const Instance& inst);

using Solver = std::function<ExchangeSequence(const Instance&)>;

// Recursion helpers shared by all solvers. Each reduces, calls `solve` on
// the children and lifts the result back.
ExchangeSequence solve_via_reduced(const Reduced& r, const Solver& solve,
                                   ReductionTrace* trace);
ExchangeSequence solve_via_tight(const Instance& inst, const ElemSet& z,
                                 const Solver& solve, ReductionTrace* trace);
// Handles the orientation swap, the consistency fix and the lifting.
ExchangeSequence solve_via_triad(const Instance& inst, const ElemSet& t,
                                 bool dual, const Solver& solve,
                                 ReductionTrace* trace);

}  // namespace symex

#endif  // SYMEX_REDUCTIONS_HPP_
