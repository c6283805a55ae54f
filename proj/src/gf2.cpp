// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#include "symex/gf2.hpp"

#include <utility>

namespace symex {

bool XorBasis::insert(BitVec v) {
  for (std::size_t b = v.find_first(); b != BitVec::npos; b = v.find_first()) {
    int p = pivot_of_bit_[b];
    if (p < 0) {
      pivot_of_bit_[b] = static_cast<int>(vecs_.size());
      vecs_.push_back(std::move(v));
      return true;
    }
    v ^= vecs_[p];
  }
  return false;
}

bool XorBasis::in_span(BitVec v) const {
  for (std::size_t b = v.find_first(); b != BitVec::npos; b = v.find_first()) {
    int p = pivot_of_bit_[b];
    if (p < 0) return false;
    v ^= vecs_[p];
  }
  return true;
}

int gf2_rank(const std::vector<BitVec>& vecs) {
  if (vecs.empty()) return 0;
  XorBasis basis(vecs.front().size());
  for (const BitVec& v : vecs) basis.insert(v);
  return basis.dim();
}

namespace {

// Gauss-Jordan elimination in place; returns pivot column per kept row.
std::vector<std::size_t> reduce(std::vector<BitVec>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && !rows[sel].test(c)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i].test(c)) rows[i] ^= rows[r];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

std::vector<BitVec> row_space_basis(const std::vector<BitVec>& rows,
                                    std::size_t ncols) {
  std::vector<BitVec> work = rows;
  reduce(work, ncols);
  return work;
}

std::vector<BitVec> nullspace(const std::vector<BitVec>& rows,
                              std::size_t ncols) {
  std::vector<BitVec> work = rows;
  std::vector<std::size_t> pivots = reduce(work, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<BitVec> out;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    BitVec v(ncols);
    v.set(free);
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (work[i].test(free)) v.set(pivots[i]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<BitVec> transpose(const std::vector<BitVec>& rows,
                              std::size_t ncols) {
  std::vector<BitVec> cols(ncols, BitVec(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = rows[i].find_first(); c != BitVec::npos;
         c = rows[i].find_next(c)) {
      cols[c].set(i);
    }
  }
  return cols;
}

}  // namespace symex
