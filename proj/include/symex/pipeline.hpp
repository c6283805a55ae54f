// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SYMEX_PIPELINE_HPP_
#define SYMEX_PIPELINE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "symex/reductions.hpp"
#include "symex/special.hpp"
#include "symex/sums.hpp"

namespace symex {

struct SolveOptions {
  // Largest ground set handed to exhaustive search or 2-sum detection.
  int bfs_cap = 16;
};

struct SolveReport {
  Mode mode = Mode::kWhite;
  ExchangeSequence sequence;
  int length = 0;
  int width = 0;
  int size = 0;
  int rank = 0;
  bool graphic = false;
  long long bound_length = 0;
  int bound_width = 0;
  ReductionTrace trace;

  bool within_bounds() const {
    return length <= bound_length && width <= bound_width;
  }
};

// Length and width bounds: r^2 and 2(r-1) for graphic matroids, 2r^2 and
// 4(r-1) otherwise, r and 1 for reversals. Widths are at least 1.
void fill_bounds(SolveReport& report);

// Transforms inst.x into inst.y avoiding inst.forbidden. The result is
// replayed before returning. Throws IncompatibleError, DomainError,
// UnsupportedError (naming the irreducible instance) or CapacityError.
SolveReport solve_white(const Instance& inst, const SolveOptions& opts = {});

// Reverses a pair of disjoint bases in exactly r strictly monotone steps;
// `last` is used in the final step when given.
SolveReport solve_gabow(MatroidPtr m, const BasisPair& x,
                        std::optional<Elem> last = std::nullopt,
                        const SolveOptions& opts = {});

// Connected components through the fundamental circuits of a greedy
// basis; none when the matroid is connected.
std::optional<std::vector<ElemSet>> detect_1sum(const Matroid& m);

// A 2-separation (A, B) and the matching 2-sum rebuilt on A + t and B + t.
// sum id i corresponds to to_original[i] of the searched matroid.
struct TwoSumDetection {
  ElemSet a;
  ElemSet b;
  std::shared_ptr<const SumMatroid> sum;
  std::vector<Elem> to_original;
};

// Exhaustive search over partitions with |A|, |B| >= 2 and
// r(A) + r(B) = r(E) + 1. Returns none (and sets `warning`) above `cap`.
std::optional<TwoSumDetection> detect_2sum_small(
    const Matroid& m, int cap, std::string* warning = nullptr);

// Rewrites sums whose shared elements became loops or coloops after
// minors, keeping element ids and labels. Other matroids pass through.
MatroidPtr simplify_sum(MatroidPtr m);

// ---- decomposition trees --------------------------------------------------

struct TreeNode {
  std::string id;
  std::string tag;  // graphic, cographic, r10, f7 or gf2
  MatroidPtr m;
};

struct TreeSum {
  std::string a;
  std::string b;
  int arity = 1;
  std::vector<std::string> shared;
};

struct DecompositionTree {
  std::vector<TreeNode> nodes;
  std::vector<TreeSum> sums;
};

// Folds the sums from nodes[0], children in the order of `sums`. Throws
// CompositionError when the edges do not form a tree or a sum is invalid.
MatroidPtr compose_tree(const DecompositionTree& tree);

// The cographic K_{3,4} core 3-summed with four copies of a 20-edge
// 4-regular gadget along its four degree-3 stars: 68 elements, rank 34.
DecompositionTree k34_gadget_tree();

}  // namespace symex

#endif  // SYMEX_PIPELINE_HPP_
