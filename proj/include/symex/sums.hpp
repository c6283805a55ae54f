// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SYMEX_SUMS_HPP_
#define SYMEX_SUMS_HPP_

#include <array>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "symex/matroid.hpp"

namespace symex {

// Shared elements are named by label; they must exist in both parts and
// every other label must occur in only one part.
struct SumSpec {
  int arity = 1;
  std::vector<std::string> shared;
};

// Binary k-sum M1 (+)_k M2 on E1 symmetric-difference E2. Elements of M1
// come first (in M1 order), followed by those of M2.
class SumMatroid : public Matroid {
 public:
  // Assumes a validated spec; use compose_sum for checked construction.
  // Unchecked sums (minors of checked ones) may be degenerate; they answer
  // basis queries by rank only.
  SumMatroid(MatroidPtr m1, MatroidPtr m2, SumSpec spec, bool checked = false,
             std::shared_ptr<const BinaryMatroid> rep = nullptr);

  const MatroidPtr& part(int i) const { return parts_[i]; }
  int arity() const { return spec_.arity; }
  const SumSpec& spec() const { return spec_; }
  // Ids of the shared elements inside part i, in spec order.
  const std::vector<Elem>& shared_ids(int i) const { return shared_[i]; }
  // Sum id of a part element, or -1 for shared ones.
  Elem from_part(int i, Elem e) const { return to_sum_[i][e]; }
  // Splits a set of sum elements into part-local sets.
  std::pair<ElemSet, ElemSet> split(const ElemSet& s) const;

  bool checked() const { return checked_; }
  bool is_basis(const ElemSet& s) const override;
  std::string kind() const override { return "sum"; }
  std::shared_ptr<const BinaryMatroid> representation() const override {
    return rep_;
  }
  // Rank from rank queries on the parts alone (cycle-space formula).
  int formula_rank(const ElemSet& s) const;

 protected:
  int rank_impl(const ElemSet& s) const override;
  // Minors of non-shared elements are pushed into the parts.
  MatroidPtr minor_impl(const ElemSet& contract,
                        const ElemSet& del) const override;

 private:
  std::array<MatroidPtr, 2> parts_;
  SumSpec spec_;
  bool checked_;
  std::shared_ptr<const BinaryMatroid> rep_;
  std::array<std::vector<Elem>, 2> shared_;
  std::array<std::vector<Elem>, 2> to_sum_;
  std::vector<std::pair<int, Elem>> origin_;
};

// Validates the sum preconditions and throws CompositionError naming the
// first violated clause.
std::shared_ptr<const SumMatroid> compose_sum(MatroidPtr m1, MatroidPtr m2,
                                              const SumSpec& spec);
void check_sum_spec(const Matroid& m1, const Matroid& m2, const SumSpec& spec);

// Representation of the sum from representations of the parts, obtained
// from the cycle space {C1 + C2 : C1 and C2 agree on the shared set}.
std::shared_ptr<const BinaryMatroid> compose_binary(const Matroid& m1,
                                                    const Matroid& m2,
                                                    const SumSpec& spec);

// Ground-set labels of the sum, in SumMatroid order.
std::vector<std::string> sum_labels(const Matroid& m1, const Matroid& m2,
                                    const SumSpec& spec);

}  // namespace symex

#endif  // SYMEX_SUMS_HPP_
