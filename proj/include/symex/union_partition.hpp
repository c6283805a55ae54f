// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SYMEX_UNION_PARTITION_HPP_
#define SYMEX_UNION_PARTITION_HPP_

#include "symex/matroid.hpp"

namespace symex {

struct UnionPartition {
  bool feasible = false;
  ElemSet first;   // independent in m1
  ElemSet second;  // independent in m2
  // When infeasible: a set Z with r1(Z) + r2(Z) < |Z|.
  ElemSet witness;
};

// Splits `target` into an m1-independent and an m2-independent part by
// shortest augmenting paths. Both matroids must share one ground set.
UnionPartition matroid_union_partition(const Matroid& m1, const Matroid& m2,
                                       const ElemSet& target);

// Partition of the ground set into two bases, if one exists.
UnionPartition two_basis_partition(const Matroid& m);

}  // namespace symex

#endif  // SYMEX_UNION_PARTITION_HPP_
