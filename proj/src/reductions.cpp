// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#include "symex/reductions.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "symex/errors.hpp"

namespace symex {

std::string to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::kDeleteUncovered:
      return "delete_uncovered";
    case ReductionKind::kContractCommon:
      return "contract_common";
    case ReductionKind::kTightSplit:
      return "tight_split";
    case ReductionKind::kTriad:
      return "triad";
    case ReductionKind::kTriangle:
      return "triangle";
    case ReductionKind::kConsistencyFix:
      return "consistency_fix";
    case ReductionKind::kTwoSum:
      return "two_sum";
    case ReductionKind::kThreeSum:
      return "three_sum";
  }
  return "unknown";
}

namespace {

ReductionCertificate make_cert(ReductionKind kind, const Instance& inst,
                               const ElemSet& payload) {
  return {kind, inst.m->labels_of(payload), inst.m->size(),
          inst.m->full_rank()};
}

BasisPair pull(const BasisPair& p, const std::vector<Elem>& inv) {
  return {pulled(p.first, inv), pulled(p.second, inv)};
}

std::optional<Elem> pull_last(const std::optional<Elem>& h,
                              const std::vector<Elem>& inv) {
  if (!h || inv[*h] < 0) return std::nullopt;
  return inv[*h];
}

Reduced make_child(const Instance& inst, MatroidPtr child_m,
                   std::vector<Elem> to_parent, ReductionCertificate cert) {
  std::vector<Elem> inv = inverse_map(to_parent, inst.m->size());
  Reduced r;
  r.child.m = std::move(child_m);
  r.child.x = pull(inst.x, inv);
  r.child.y = pull(inst.y, inv);
  r.child.forbidden = pulled(inst.forbidden, inv);
  r.child.last = pull_last(inst.last, inv);
  r.to_parent = std::move(to_parent);
  r.cert = std::move(cert);
  return r;
}

}  // namespace

void check_instance(const Instance& inst) {
  const Matroid& m = *inst.m;
  for (const ElemSet* s :
       {&inst.x.first, &inst.x.second, &inst.y.first, &inst.y.second}) {
    if (!m.is_basis(*s)) throw DomainError("pair member is not a basis");
  }
  if (!compatible(inst.x, inst.y)) {
    throw IncompatibleError("basis pairs are not compatible");
  }
  ElemSet fixed = set_union(set_intersection(inst.x.first, inst.y.first),
                            set_intersection(inst.x.second, inst.y.second));
  m.rank(inst.forbidden);
  if (!is_subset(inst.forbidden, fixed)) {
    throw DomainError("forbidden elements must stay on their side");
  }
  if (inst.last && (*inst.last < 0 || *inst.last >= m.size())) {
    throw DomainError("last-step element outside the ground set");
  }
}

bool is_covering(const Instance& inst) {
  return static_cast<int>(set_union(inst.x.first, inst.x.second).size()) ==
         inst.m->size();
}

bool is_disjoint(const BasisPair& p) { return disjoint(p.first, p.second); }

Reduced delete_uncovered(const Instance& inst) {
  ElemSet keep = set_union(inst.x.first, inst.x.second);
  ElemSet removed = set_difference(inst.m->ground(), keep);
  return make_child(inst, inst.m->restriction(keep), keep,
                    make_cert(ReductionKind::kDeleteUncovered, inst, removed));
}

Reduced contract_common(const Instance& inst) {
  if (!compatible(inst.x, inst.y)) {
    throw IncompatibleError("basis pairs are not compatible");
  }
  ElemSet common = set_intersection(inst.x.first, inst.x.second);
  ElemSet keep = set_difference(inst.m->ground(), common);
  return make_child(inst, inst.m->contraction(common), keep,
                    make_cert(ReductionKind::kContractCommon, inst, common));
}

ExchangeSequence lift(const Reduced& r, const ExchangeSequence& child_seq) {
  return mapped(child_seq, r.to_parent);
}

bool is_tight(const Matroid& m, const ElemSet& z) {
  return static_cast<int>(z.size()) == 2 * m.rank(z);
}

std::optional<ElemSet> find_nontrivial_tight_set(const Matroid& m,
                                                 const BasisPair& x) {
  const int n = m.size();
  if (!is_disjoint(x) ||
      static_cast<int>(x.first.size() + x.second.size()) != n ||
      !m.is_basis(x.first) || !m.is_basis(x.second)) {
    throw DomainError("tight-set search needs two disjoint covering bases");
  }
  std::vector<ElemSet> arcs(n);
  for (Elem y = 0; y < n; ++y) {
    const ElemSet& other = contains(x.first, y) ? x.second : x.first;
    arcs[y] = without(m.fundamental_circuit(other, y), y);
  }
  std::vector<BitVec> reach(n, BitVec(n));
  for (Elem s = 0; s < n; ++s) {
    std::deque<Elem> q{s};
    reach[s].set(s);
    while (!q.empty()) {
      Elem u = q.front();
      q.pop_front();
      for (Elem v : arcs[u]) {
        if (!reach[s].test(v)) {
          reach[s].set(v);
          q.push_back(v);
        }
      }
    }
  }
  std::optional<ElemSet> best;
  for (Elem s = 0; s < n; ++s) {
    if (reach[s].count() == static_cast<std::size_t>(n)) continue;
    bool sink = true;
    for (std::size_t u = reach[s].find_first(); u != BitVec::npos && sink;
         u = reach[s].find_next(u)) {
      sink = reach[u].test(s);
    }
    if (!sink) continue;
    ElemSet z;
    for (std::size_t u = reach[s].find_first(); u != BitVec::npos;
         u = reach[s].find_next(u)) {
      z.push_back(static_cast<Elem>(u));
    }
    if (!best || z < *best) best = std::move(z);
  }
  return best;
}

TightSplit split_on_tight_set(const Instance& inst, const ElemSet& z) {
  ElemSet zn = normalized(z);
  inst.m->rank(zn);
  if (zn.empty() || static_cast<int>(zn.size()) == inst.m->size() ||
      !is_tight(*inst.m, zn)) {
    throw DomainError("split needs a nontrivial tight set");
  }
  ElemSet rest = set_difference(inst.m->ground(), zn);
  TightSplit s;
  s.inner = make_child(inst, inst.m->restriction(zn), zn,
                       make_cert(ReductionKind::kTightSplit, inst, zn));
  s.outer = make_child(inst, inst.m->contraction(zn), rest,
                       make_cert(ReductionKind::kTightSplit, inst, zn));
  s.inner_last = inst.last && contains(zn, *inst.last);
  if (s.inner_last) s.outer.child.last.reset();
  for (const Reduced* r : {&s.inner, &s.outer}) {
    if (!is_basis_pair(*r->child.m, r->child.x) ||
        !is_basis_pair(*r->child.m, r->child.y)) {
      throw DomainError("pairs do not split along the tight set");
    }
  }
  return s;
}

ExchangeSequence lift_tight(const TightSplit& split,
                            const ExchangeSequence& inner,
                            const ExchangeSequence& outer) {
  ExchangeSequence a = lift(split.inner, inner);
  ExchangeSequence b = lift(split.outer, outer);
  if (split.inner_last) std::swap(a, b);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool is_triad(const Matroid& m, const ElemSet& t) {
  if (t.size() != 3) return false;
  const int r = m.full_rank();
  ElemSet rest = set_difference(m.ground(), t);
  if (m.rank(rest) >= r) return false;
  for (Elem e : t) {
    if (m.rank(with(rest, e)) != r) return false;
  }
  return true;
}

bool is_triangle(const Matroid& m, const ElemSet& t) {
  if (t.size() != 3 || m.rank(t) != 2) return false;
  for (Elem e : t) {
    if (m.rank(without(t, e)) != 2) return false;
  }
  return true;
}

namespace {

// Lexicographically first triple {a < b < c} of `cand` whose columns sum
// to zero, pairwise distinct and nonzero.
std::optional<ElemSet> xor_triangle(
    const BinaryMatroid& rep, const ElemSet& cand,
    const std::function<bool(const ElemSet&)>& accept) {
  using Key = std::vector<BitVec::block_type>;
  auto key = [](const BitVec& v) {
    Key k;
    boost::to_block_range(v, std::back_inserter(k));
    return k;
  };
  std::map<Key, ElemSet> by_column;
  for (Elem e : cand) by_column[key(rep.columns()[e])].push_back(e);
  for (std::size_t i = 0; i < cand.size(); ++i) {
    const BitVec& ca = rep.columns()[cand[i]];
    if (ca.none()) continue;
    for (std::size_t j = i + 1; j < cand.size(); ++j) {
      const BitVec& cb = rep.columns()[cand[j]];
      if (cb.none() || ca == cb) continue;
      auto it = by_column.find(key(ca ^ cb));
      if (it == by_column.end()) continue;
      for (Elem c : it->second) {
        if (c <= cand[j]) continue;
        ElemSet t{cand[i], cand[j], c};
        if (accept(t)) return t;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ElemSet> find_triangle(const Matroid& m, const ElemSet& cover,
                                     const ElemSet& avoid) {
  ElemSet cand = set_difference(normalized(cover), normalized(avoid));
  auto rep = as_binary(m);
  return xor_triangle(*rep, cand,
                      [&](const ElemSet& t) { return is_triangle(m, t); });
}

std::optional<ElemSet> find_triad(const Matroid& m, const ElemSet& cover,
                                  const ElemSet& avoid) {
  ElemSet cand = set_difference(normalized(cover), normalized(avoid));
  auto dual =
      std::static_pointer_cast<const BinaryMatroid>(as_binary(m)->dual());
  return xor_triangle(*dual, cand,
                      [&](const ElemSet& t) { return is_triad(m, t); });
}

bool consistent_on(const BasisPair& x, const BasisPair& y, const ElemSet& t) {
  ElemSet a = set_intersection(x.first, t);
  return a == set_intersection(y.first, t) ||
         a == set_intersection(y.second, t);
}

namespace {

std::vector<BasisPair> triad_candidates(const Matroid& m, const BasisPair& p,
                                        const ElemSet& t) {
  const bool two_first = set_intersection(p.first, t).size() == 2;
  ElemSet a = set_difference(p.first, t);
  ElemSet b = set_difference(p.second, t);
  std::vector<BasisPair> out;
  for (Elem k : t) {
    BasisPair c = two_first
                      ? BasisPair{set_union(a, without(t, k)), with(b, k)}
                      : BasisPair{with(a, k), set_union(b, without(t, k))};
    if (is_basis_pair(m, c)) out.push_back(std::move(c));
  }
  return out;
}

std::optional<ExchangeStep> step_between(const BasisPair& from,
                                         const BasisPair& to) {
  if (from == to) return std::nullopt;
  ElemSet out = set_difference(from.first, to.first);
  ElemSet in = set_difference(to.first, from.first);
  if (out.size() != 1 || in.size() != 1) {
    throw InternalError("candidate pair is not one exchange away");
  }
  return ExchangeStep{out[0], in[0]};
}

}  // namespace

ConsistencyFix make_consistent_on_triad(const Matroid& m, const BasisPair& x,
                                        const BasisPair& y, const ElemSet& t) {
  if (consistent_on(x, y, t)) return {std::nullopt, std::nullopt, x, y};
  auto px = triad_candidates(m, x, t);
  auto py = triad_candidates(m, y, t);
  std::optional<ConsistencyFix> best;
  int best_cost = 3;
  for (const auto& cx : px) {
    for (const auto& cy : py) {
      if (!consistent_on(cx, cy, t)) continue;
      const int cost = (cx != x) + (cy != y);
      const bool better =
          !best || cost < best_cost ||
          (cost == best_cost && std::tie(cx.first, cy.first) <
                                    std::tie(best->x.first, best->y.first));
      if (better) {
        best = ConsistencyFix{step_between(x, cx), step_between(y, cy), cx, cy};
        best_cost = cost;
      }
    }
  }
  if (!best) throw InternalError("no consistent pair on the triad");
  return *best;
}

TriadReduction reduce_triad(const Instance& inst, const ElemSet& t, bool dual) {
  if (!consistent_on(inst.x, inst.y, t)) {
    throw DomainError("pairs are not consistent on the triad");
  }
  if (!disjoint(t, inst.forbidden)) {
    throw DomainError("triad meets the forbidden set");
  }
  if (inst.last && contains(t, *inst.last)) {
    throw DomainError("triad contains the last-step element");
  }
  ElemSet in_first = set_intersection(inst.x.first, t);
  ElemSet in_second = set_intersection(inst.x.second, t);
  if (in_first.size() != 2 || in_second.size() != 1) {
    throw DomainError("triad reduction needs two triad elements in X1");
  }
  TriadReduction r;
  r.t1 = in_first[0];
  r.t2 = in_first[1];
  r.t3 = in_second[0];
  r.dual = dual;
  const bool pair_in_y1 =
      contains(inst.y.first, r.t1) && contains(inst.y.first, r.t2);
  Instance adj = inst;
  adj.x = {without(inst.x.first, r.t2), without(inst.x.second, r.t3)};
  adj.y = pair_in_y1 ? BasisPair{without(inst.y.first, r.t2),
                                 without(inst.y.second, r.t3)}
                     : BasisPair{without(inst.y.first, r.t3),
                                 without(inst.y.second, r.t2)};
  ElemSet removed{std::min(r.t2, r.t3), std::max(r.t2, r.t3)};
  MatroidPtr child =
      dual ? inst.m->minor({r.t3}, {r.t2}) : inst.m->minor({r.t2}, {r.t3});
  r.reduced = make_child(
      adj, child, set_difference(inst.m->ground(), removed),
      make_cert(dual ? ReductionKind::kTriangle : ReductionKind::kTriad, inst,
                t));
  return r;
}

ExchangeSequence lift_triad(const Instance& parent, const TriadReduction& r,
                            const ExchangeSequence& child_seq) {
  const Matroid& m = *parent.m;
  const Elem t1 = r.t1, t2 = r.t2, t3 = r.t3;
  BasisPair z = {mapped(r.reduced.child.x.first, r.reduced.to_parent),
                 mapped(r.reduced.child.x.second, r.reduced.to_parent)};
  ExchangeSequence out;
  for (const ExchangeStep& cs : child_seq) {
    ExchangeStep s{r.reduced.to_parent[cs.e], r.reduced.to_parent[cs.f]};
    if (s.e == t1) {
      BasisPair mid{with(z.first, t3), with(z.second, t2)};
      if (is_basis_pair(m, mid)) {
        out.push_back({t2, t3});
        out.push_back({t1, s.f});
      } else {
        out.push_back({t1, t3});
        out.push_back({t2, s.f});
      }
    } else if (s.f == t1) {
      BasisPair mid{with(z.first, t2), with(z.second, t3)};
      if (is_basis_pair(m, mid)) {
        out.push_back({t3, t2});
        out.push_back({s.e, t1});
      } else {
        out.push_back({t3, t1});
        out.push_back({s.e, t2});
      }
    } else {
      out.push_back(s);
    }
    z = apply_step(z, s);
  }
  return out;
}

ExchangeSequence solve_rank_le2(const Instance& inst) {
  const Matroid& m = *inst.m;
  const int r = m.full_rank();
  if (r > 2) throw DomainError("base case needs rank at most two");
  if (inst.x == inst.y) return {};
  ExchangeSequence path;
  ElemSet used;
  std::function<bool(const BasisPair&, int)> dfs = [&](const BasisPair& cur,
                                                       int depth) {
    if (depth == 0) {
      if (cur != inst.y) return false;
      const auto& lastp = path.back();
      return !inst.last || lastp.e == *inst.last || lastp.f == *inst.last;
    }
    for (Elem e : set_difference(cur.first, cur.second)) {
      if (contains(inst.forbidden, e) || contains(used, e)) continue;
      for (Elem f : set_difference(cur.second, cur.first)) {
        if (contains(inst.forbidden, f) || contains(used, f)) continue;
        ExchangeStep s{e, f};
        if (!is_valid_exchange(m, cur, s)) continue;
        path.push_back(s);
        used = with(with(used, e), f);
        if (dfs(apply_step(cur, s), depth - 1)) return true;
        used = without(without(used, e), f);
        path.pop_back();
      }
    }
    return false;
  };
  for (int len = 1; len <= r; ++len) {
    if (dfs(inst.x, len)) return path;
  }
  throw InternalError("rank <= 2 instance has no width-1 solution");
}

ExchangeSequence solve_via_reduced(const Reduced& r, const Solver& solve,
                                   ReductionTrace* trace) {
  if (trace) trace->push_back(r.cert);
  return lift(r, solve(r.child));
}

ExchangeSequence solve_via_tight(const Instance& inst, const ElemSet& z,
                                 const Solver& solve, ReductionTrace* trace) {
  TightSplit split = split_on_tight_set(inst, z);
  if (trace) trace->push_back(split.inner.cert);
  ExchangeSequence a = solve(split.inner.child);
  ExchangeSequence b = solve(split.outer.child);
  return lift_tight(split, a, b);
}

ExchangeSequence solve_via_triad(const Instance& inst, const ElemSet& t,
                                 bool dual, const Solver& solve,
                                 ReductionTrace* trace) {
  if (set_intersection(inst.x.first, t).size() == 1) {
    Instance sw = inst;
    sw.x = swapped(inst.x);
    sw.y = swapped(inst.y);
    return flipped(solve_via_triad(sw, t, dual, solve, trace));
  }
  ConsistencyFix fix = make_consistent_on_triad(*inst.m, inst.x, inst.y, t);
  if (fix.step_y && inst.last) {
    throw InternalError("consistency fix would displace the last step");
  }
  Instance adj = inst;
  adj.x = fix.x;
  adj.y = fix.y;
  if (trace && (fix.step_x || fix.step_y)) {
    trace->push_back(make_cert(ReductionKind::kConsistencyFix, inst, t));
  }
  TriadReduction red = reduce_triad(adj, t, dual);
  if (trace) trace->push_back(red.reduced.cert);
  ExchangeSequence body = lift_triad(adj, red, solve(red.reduced.child));
  ExchangeSequence out;
  if (fix.step_x) out.push_back(*fix.step_x);
  out.insert(out.end(), body.begin(), body.end());
  if (fix.step_y) out.push_back(flipped(*fix.step_y));
  return out;
}

}  // namespace symex
