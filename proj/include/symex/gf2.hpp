// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SYMEX_GF2_HPP_
#define SYMEX_GF2_HPP_

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <vector>

namespace symex {

using BitVec = boost::dynamic_bitset<std::uint64_t>;

// Incremental xor basis: vectors are kept reduced with distinct pivots.
class XorBasis {
 public:
  explicit XorBasis(std::size_t width) : pivot_of_bit_(width, -1) {}

  // Reduces v against the basis; inserts it when independent.
  bool insert(BitVec v);
  bool in_span(BitVec v) const;
  int dim() const { return static_cast<int>(vecs_.size()); }
  const std::vector<BitVec>& vectors() const { return vecs_; }

 private:
  std::vector<BitVec> vecs_;
  std::vector<int> pivot_of_bit_;
};

// Rank of a family of equal-width vectors.
int gf2_rank(const std::vector<BitVec>& vecs);

// Independent rows spanning the same space, in reduced echelon form.
std::vector<BitVec> row_space_basis(const std::vector<BitVec>& rows,
                                    std::size_t ncols);

// Basis of {x : <row, x> = 0 for every row}.
std::vector<BitVec> nullspace(const std::vector<BitVec>& rows,
                              std::size_t ncols);

// Column j of a row-major matrix as a vector over the rows.
std::vector<BitVec> transpose(const std::vector<BitVec>& rows,
                              std::size_t ncols);

}  // namespace symex

#endif  // SYMEX_GF2_HPP_
