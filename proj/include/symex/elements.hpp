// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SYMEX_ELEMENTS_HPP_
#define SYMEX_ELEMENTS_HPP_

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace symex {

// Elements are local ids 0..n-1 of one matroid's ground set.
using Elem = int;

// Sorted, duplicate-free vector of element ids.
using ElemSet = std::vector<Elem>;

inline ElemSet normalized(ElemSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool contains(const ElemSet& s, Elem e) {
  return std::binary_search(s.begin(), s.end(), e);
}

inline ElemSet set_union(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

inline ElemSet set_intersection(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline ElemSet set_difference(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline ElemSet set_symmetric_difference(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

inline bool is_subset(const ElemSet& a, const ElemSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool disjoint(const ElemSet& a, const ElemSet& b) {
  return set_intersection(a, b).empty();
}

inline ElemSet with(ElemSet s, Elem e) {
  auto it = std::lower_bound(s.begin(), s.end(), e);
  if (it == s.end() || *it != e) s.insert(it, e);
  return s;
}

inline ElemSet without(ElemSet s, Elem e) {
  auto it = std::lower_bound(s.begin(), s.end(), e);
  if (it != s.end() && *it == e) s.erase(it);
  return s;
}

inline ElemSet full_set(int n) {
  ElemSet s(n);
  for (int i = 0; i < n; ++i) s[i] = i;
  return s;
}

// Subset of {0..n-1} encoded by the low n bits of mask (n <= 64).
inline ElemSet from_mask(std::uint64_t mask) {
  ElemSet s;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) s.push_back(i);
  }
  return s;
}

inline std::uint64_t to_mask(const ElemSet& s) {
  std::uint64_t m = 0;
  for (Elem e : s) m |= std::uint64_t{1} << e;
  return m;
}

// Maps every element through `map` (map[e] is the new id) and normalizes.
inline ElemSet mapped(const ElemSet& s, const std::vector<Elem>& map) {
  ElemSet out;
  out.reserve(s.size());
  for (Elem e : s) out.push_back(map[e]);
  return normalized(std::move(out));
}

// Inverse map restricted to ids present in `map`; absent ids map to -1.
inline std::vector<Elem> inverse_map(const std::vector<Elem>& map, int n) {
  std::vector<Elem> inv(n, -1);
  for (int i = 0; i < static_cast<int>(map.size()); ++i) inv[map[i]] = i;
  return inv;
}

// Maps a parent set into child ids, dropping elements that are absent.
inline ElemSet pulled(const ElemSet& s, const std::vector<Elem>& inv) {
  ElemSet out;
  for (Elem e : s) {
    if (inv[e] >= 0) out.push_back(inv[e]);
  }
  return normalized(std::move(out));
}

}  // namespace symex

#endif  // SYMEX_ELEMENTS_HPP_
