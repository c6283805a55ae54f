// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#include "symex/exchange.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <sstream>

#include "symex/errors.hpp"

namespace symex {

ExchangeSequence flipped(const ExchangeSequence& seq) {
  ExchangeSequence out;
  out.reserve(seq.size());
  for (const auto& s : seq) out.push_back(flipped(s));
  return out;
}

int sequence_width(const ExchangeSequence& seq) {
  std::map<Elem, int> count;
  int best = 0;
  for (const auto& s : seq) {
    best = std::max(best, ++count[s.e]);
    best = std::max(best, ++count[s.f]);
  }
  return best;
}

int occurrences(const ExchangeSequence& seq, Elem e) {
  int c = 0;
  for (const auto& s : seq) c += (s.e == e) + (s.f == e);
  return c;
}

bool touches(const ExchangeSequence& seq, const ElemSet& s) {
  for (const auto& st : seq) {
    if (contains(s, st.e) || contains(s, st.f)) return true;
  }
  return false;
}

bool is_basis_pair(const Matroid& m, const BasisPair& p) {
  return m.is_basis(p.first) && m.is_basis(p.second);
}

bool is_valid_exchange(const Matroid& m, const BasisPair& p,
                       const ExchangeStep& s) {
  if (s.e < 0 || s.f < 0 || s.e >= m.size() || s.f >= m.size()) return false;
  if (!contains(p.first, s.e) || contains(p.second, s.e)) return false;
  if (!contains(p.second, s.f) || contains(p.first, s.f)) return false;
  BasisPair q = apply_step(p, s);
  return m.is_basis(q.first) && m.is_basis(q.second);
}

BasisPair apply_step(const BasisPair& p, const ExchangeStep& s) {
  return {with(without(p.first, s.e), s.f), with(without(p.second, s.f), s.e)};
}

BasisPair apply_and_validate(const Matroid& m, const BasisPair& p,
                             const ExchangeSequence& seq,
                             const ElemSet& forbidden) {
  BasisPair cur = p;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const auto& s = seq[k];
    if (contains(forbidden, s.e) || contains(forbidden, s.f)) {
      throw ForbiddenError(
          static_cast<int>(k),
          "step " + std::to_string(k) + " uses a forbidden element");
    }
    if (!is_valid_exchange(m, cur, s)) {
      throw ValidationError(
          static_cast<int>(k),
          "step " + std::to_string(k) + " is not a valid symmetric exchange");
    }
    cur = apply_step(cur, s);
  }
  return cur;
}

bool compatible(const BasisPair& x, const BasisPair& y) {
  return set_intersection(x.first, x.second) ==
             set_intersection(y.first, y.second) &&
         set_union(x.first, x.second) == set_union(y.first, y.second);
}

bool is_strictly_monotone(const BasisPair& start, const BasisPair& target,
                          const ExchangeSequence& seq) {
  BasisPair cur = start;
  for (const auto& s : seq) {
    if (contains(target.first, s.e) || !contains(target.first, s.f)) {
      return false;
    }
    if (!contains(cur.first, s.e) || !contains(cur.second, s.f)) return false;
    cur = apply_step(cur, s);
  }
  return true;
}

ExchangeSequence mapped(const ExchangeSequence& seq,
                        const std::vector<Elem>& map) {
  ExchangeSequence out;
  out.reserve(seq.size());
  for (const auto& s : seq) out.push_back({map[s.e], map[s.f]});
  return out;
}

std::string format_sequence(const Matroid& m, const ExchangeSequence& seq) {
  std::ostringstream os;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    os << k << ": " << m.label(seq[k].e) << " <-> " << m.label(seq[k].f)
       << "\n";
  }
  return os.str();
}

namespace {

struct Search {
  std::unordered_map<std::uint64_t, int> dist;
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, ExchangeStep>>
      parent;
  std::unordered_map<std::uint64_t, bool> basis_memo;
};

class Explorer {
 public:
  Explorer(const Matroid& m, const BasisPair& x, const BfsOptions& opts)
      : m_(m), opts_(opts) {
    if (opts.cap > 64) throw CapacityError("BFS cap may not exceed 64");
    if (m.size() > opts.cap) {
      throw CapacityError("ground set of " + std::to_string(m.size()) +
                          " elements exceeds the BFS cap of " +
                          std::to_string(opts.cap));
    }
    if (!is_basis_pair(m, x)) throw DomainError("BFS start is not a pair");
    common_ = to_mask(set_intersection(x.first, x.second));
    union_ = to_mask(set_union(x.first, x.second));
    forbidden_ = to_mask(opts.forbidden);
  }

  std::uint64_t second_of(std::uint64_t first) const {
    return (union_ & ~first) | common_;
  }

  bool basis(std::uint64_t mask, Search& s) const {
    auto it = s.basis_memo.find(mask);
    if (it != s.basis_memo.end()) return it->second;
    bool b = m_.is_basis(from_mask(mask));
    s.basis_memo.emplace(mask, b);
    return b;
  }

  // Calls visit(next_first, step) for every allowed exchange.
  template <typename Visit>
  void neighbours(std::uint64_t first, std::uint64_t y1, std::uint64_t y2,
                  bool monotone, Search& s, Visit&& visit) const {
    const std::uint64_t second = second_of(first);
    const std::uint64_t out = first & ~second & ~forbidden_;
    const std::uint64_t in = second & ~first & ~forbidden_;
    for (std::uint64_t a = out; a; a &= a - 1) {
      const int e = std::countr_zero(a);
      if (monotone && (y1 >> e & 1u)) continue;
      for (std::uint64_t b = in; b; b &= b - 1) {
        const int f = std::countr_zero(b);
        if (monotone && (y2 >> f & 1u)) continue;
        const std::uint64_t bit_e = std::uint64_t{1} << e;
        const std::uint64_t bit_f = std::uint64_t{1} << f;
        const std::uint64_t nf = (first & ~bit_e) | bit_f;
        const std::uint64_t ns = (second & ~bit_f) | bit_e;
        if (basis(nf, s) && basis(ns, s)) visit(nf, ExchangeStep{e, f});
      }
    }
  }

  // BFS from start; stops early at `stop` unless stop == 0 and !has_stop.
  void run(std::uint64_t start, std::uint64_t y1, std::uint64_t y2,
           bool monotone, std::optional<std::uint64_t> stop, Search& s) const {
    std::deque<std::uint64_t> queue{start};
    s.dist[start] = 0;
    while (!queue.empty()) {
      std::uint64_t cur = queue.front();
      queue.pop_front();
      if (stop && cur == *stop) return;
      const int d = s.dist[cur];
      neighbours(cur, y1, y2, monotone, s,
                 [&](std::uint64_t nxt, ExchangeStep st) {
                   if (s.dist.emplace(nxt, d + 1).second) {
                     s.parent[nxt] = {cur, st};
                     queue.push_back(nxt);
                   }
                 });
    }
  }

  ExchangeSequence path(std::uint64_t to, const Search& s) const {
    ExchangeSequence out;
    for (auto it = s.parent.find(to); it != s.parent.end();
         it = s.parent.find(it->second.first)) {
      out.push_back(it->second.second);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  const Matroid& m_;
  const BfsOptions& opts_;
  std::uint64_t common_ = 0;
  std::uint64_t union_ = 0;
  std::uint64_t forbidden_ = 0;
};

}  // namespace

BfsResult bfs_oracle(const Matroid& m, const BasisPair& x, const BasisPair& y,
                     const BfsOptions& opts) {
  Explorer ex(m, x, opts);
  BfsResult res;
  if (!compatible(x, y) || !is_basis_pair(m, y)) return res;
  const std::uint64_t start = to_mask(x.first);
  const std::uint64_t goal = to_mask(y.first);
  const std::uint64_t y1 = goal;
  const std::uint64_t y2 = to_mask(y.second);
  Search s;
  if (!opts.last) {
    ex.run(start, y1, y2, opts.monotone, goal, s);
    res.states = static_cast<std::int64_t>(s.dist.size());
    auto it = s.dist.find(goal);
    if (it == s.dist.end()) return res;
    res.reachable = true;
    res.distance = it->second;
    res.sequence = ex.path(goal, s);
    return res;
  }
  const Elem h = *opts.last;
  ex.run(start, y1, y2, opts.monotone, std::nullopt, s);
  res.states = static_cast<std::int64_t>(s.dist.size());
  // Best predecessor of the goal whose final step uses h.
  std::optional<std::uint64_t> best;
  ExchangeStep best_step;
  int best_d = 0;
  ex.neighbours(goal, 0, 0, false, s, [&](std::uint64_t p, ExchangeStep st) {
    ExchangeStep fwd = flipped(st);
    if (fwd.e != h && fwd.f != h) return;
    if (opts.monotone && ((y1 >> fwd.e & 1u) || (y2 >> fwd.f & 1u))) return;
    auto it = s.dist.find(p);
    if (it == s.dist.end()) return;
    if (!best || it->second < best_d) {
      best = p;
      best_d = it->second;
      best_step = fwd;
    }
  });
  if (!best) return res;
  res.reachable = true;
  res.distance = best_d + 1;
  res.sequence = ex.path(*best, s);
  res.sequence.push_back(best_step);
  return res;
}

std::unordered_map<std::uint64_t, int> bfs_distances(const Matroid& m,
                                                     const BasisPair& x,
                                                     const BfsOptions& opts) {
  Explorer ex(m, x, opts);
  Search s;
  ex.run(to_mask(x.first), 0, 0, false, std::nullopt, s);
  return s.dist;
}

}  // namespace symex
