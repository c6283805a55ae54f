// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SYMEX_EXCHANGE_HPP_
#define SYMEX_EXCHANGE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "symex/matroid.hpp"

namespace symex {

struct BasisPair {
  ElemSet first;
  ElemSet second;

  bool operator==(const BasisPair&) const = default;
};

// e leaves `first` and enters `second`; f moves the other way.
struct ExchangeStep {
  Elem e = -1;
  Elem f = -1;

  bool operator==(const ExchangeStep&) const = default;
};

using ExchangeSequence = std::vector<ExchangeStep>;

inline BasisPair swapped(const BasisPair& p) { return {p.second, p.first}; }
inline ExchangeStep flipped(const ExchangeStep& s) { return {s.f, s.e}; }
ExchangeSequence flipped(const ExchangeSequence& seq);

int sequence_width(const ExchangeSequence& seq);
// Number of steps touching `e`.
int occurrences(const ExchangeSequence& seq, Elem e);
bool touches(const ExchangeSequence& seq, const ElemSet& s);

bool is_basis_pair(const Matroid& m, const BasisPair& p);
bool is_valid_exchange(const Matroid& m, const BasisPair& p,
                       const ExchangeStep& s);
// Unchecked application.
BasisPair apply_step(const BasisPair& p, const ExchangeStep& s);
// Validates each step; throws ValidationError(k) or ForbiddenError(k).
BasisPair apply_and_validate(const Matroid& m, const BasisPair& p,
                             const ExchangeSequence& seq,
                             const ElemSet& forbidden = {});
bool compatible(const BasisPair& x, const BasisPair& y);
// Every step moves an element of first - target.first out and an element of
// target.first in.
bool is_strictly_monotone(const BasisPair& start, const BasisPair& target,
                          const ExchangeSequence& seq);

// Relabels steps through an element map (child id -> parent id).
ExchangeSequence mapped(const ExchangeSequence& seq,
                        const std::vector<Elem>& map);

std::string format_sequence(const Matroid& m, const ExchangeSequence& seq);

struct BfsOptions {
  ElemSet forbidden;
  bool monotone = false;
  int cap = 16;
  // When set, the returned sequence must use this element in its last step.
  std::optional<Elem> last;
};

struct BfsResult {
  bool reachable = false;
  int distance = -1;
  ExchangeSequence sequence;
  std::int64_t states = 0;
};

// Breadth-first search in the exchange graph. Throws CapacityError when
// the ground set exceeds opts.cap (the cap itself may not exceed 64).
BfsResult bfs_oracle(const Matroid& m, const BasisPair& x, const BasisPair& y,
                     const BfsOptions& opts = {});

// All pairs reachable from x (monotone flag ignored), keyed by the
// bitmask of the first basis, with their distances.
std::unordered_map<std::uint64_t, int> bfs_distances(
    const Matroid& m, const BasisPair& x, const BfsOptions& opts = {});

}  // namespace symex

#endif  // SYMEX_EXCHANGE_HPP_
