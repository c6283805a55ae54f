// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#include "symex/sums.hpp"

#include <bit>
#include <set>

#include "symex/errors.hpp"

namespace symex {

namespace {

std::vector<Elem> shared_positions(const Matroid& m, const SumSpec& spec) {
  std::vector<Elem> out;
  for (const auto& l : spec.shared) {
    Elem e = -1;
    for (Elem i = 0; i < m.size(); ++i) {
      if (m.label(i) == l) e = i;
    }
    if (e < 0) {
      throw CompositionError("shared element '" + l + "' missing from a part");
    }
    out.push_back(e);
  }
  return out;
}

ElemSet sorted_ids(std::vector<Elem> v) { return normalized(std::move(v)); }

// Subspace of GF(2)^k (as a membership table over masks) formed by the
// shared-coordinate patterns of cycles of m restricted to x + shared.
std::vector<bool> shared_patterns(const Matroid& m, const ElemSet& x,
                                  const std::vector<Elem>& shared) {
  const int k = static_cast<int>(shared.size());
  const int rx = m.rank(x);
  std::vector<bool> in(1u << k, false);
  in[0] = true;
  std::vector<unsigned> order(1u << k);
  for (unsigned s = 0; s < order.size(); ++s) order[s] = s;
  std::stable_sort(order.begin(), order.end(), [](unsigned a, unsigned b) {
    return std::popcount(a) < std::popcount(b);
  });
  for (unsigned s : order) {
    if (s == 0) continue;
    ElemSet xs = x;
    for (int b = 0; b < k; ++b) {
      if (s >> b & 1u) xs.push_back(shared[b]);
    }
    xs = normalized(std::move(xs));
    const int d = std::popcount(s) - m.rank(xs) + rx;
    int below = 0;
    for (unsigned sub = (s - 1) & s;; sub = (sub - 1) & s) {
      if (in[sub]) ++below;
      if (sub == 0) break;
    }
    in[s] = (1 << d) > below;
  }
  return in;
}

int span_dim(const std::vector<unsigned>& vecs) {
  std::vector<unsigned> basis;
  for (unsigned v : vecs) {
    for (unsigned b : basis) v = std::min(v, v ^ b);
    if (v != 0) basis.push_back(v);
  }
  return static_cast<int>(basis.size());
}

bool is_loop(const Matroid& m, Elem e) { return m.rank({e}) == 0; }

bool is_coloop(const Matroid& m, Elem e) {
  return m.rank(without(m.ground(), e)) < m.full_rank();
}

}  // namespace

std::vector<std::string> sum_labels(const Matroid& m1, const Matroid& m2,
                                    const SumSpec& spec) {
  std::set<std::string> shared(spec.shared.begin(), spec.shared.end());
  std::vector<std::string> out;
  for (const Matroid* m : {&m1, &m2}) {
    for (const auto& l : m->labels()) {
      if (!shared.count(l)) out.push_back(l);
    }
  }
  return out;
}

void check_sum_spec(const Matroid& m1, const Matroid& m2, const SumSpec& spec) {
  const int k = static_cast<int>(spec.shared.size());
  if (spec.arity < 1 || spec.arity > 3) {
    throw CompositionError("arity must be 1, 2 or 3");
  }
  if (k != (spec.arity == 1 ? 0 : spec.arity == 2 ? 1 : 3)) {
    throw CompositionError("shared set size does not match arity");
  }
  std::set<std::string> shared(spec.shared.begin(), spec.shared.end());
  if (static_cast<int>(shared.size()) != k) {
    throw CompositionError("shared labels repeated");
  }
  std::vector<Elem> t1 = shared_positions(m1, spec);
  std::vector<Elem> t2 = shared_positions(m2, spec);
  std::set<std::string> seen;
  for (const auto& l : sum_labels(m1, m2, spec)) {
    if (!seen.insert(l).second) {
      throw CompositionError("label '" + l + "' occurs in both parts");
    }
  }
  const int total = m1.size() + m2.size() - 2 * k;
  if (m1.size() >= total || m2.size() >= total) {
    throw CompositionError("size clause |E1|, |E2| < |E1 xor E2| violated");
  }
  if (spec.arity == 2) {
    for (auto [m, t] : {std::pair{&m1, t1[0]}, std::pair{&m2, t2[0]}}) {
      if (is_loop(*m, t)) throw CompositionError("shared element is a loop");
      if (is_coloop(*m, t)) {
        throw CompositionError("shared element is a coloop");
      }
    }
  }
  if (spec.arity == 3) {
    for (auto [m, t] : {std::pair{&m1, t1}, std::pair{&m2, t2}}) {
      ElemSet tset = sorted_ids(t);
      bool triangle = m->rank(tset) == 2;
      for (int a = 0; a < 3 && triangle; ++a) {
        triangle = m->rank(without(tset, tset[a])) == 2;
      }
      if (!triangle) {
        throw CompositionError("shared set is not a triangle of a part");
      }
      if (m->rank(set_difference(m->ground(), tset)) != m->full_rank()) {
        throw CompositionError("shared triangle is not coindependent");
      }
    }
  }
}

SumMatroid::SumMatroid(MatroidPtr m1, MatroidPtr m2, SumSpec spec, bool checked,
                       std::shared_ptr<const BinaryMatroid> rep)
    : Matroid(sum_labels(*m1, *m2, spec)),
      parts_{std::move(m1), std::move(m2)},
      spec_(std::move(spec)),
      checked_(checked),
      rep_(rep ? std::move(rep)
               : compose_binary(*parts_[0], *parts_[1], spec_)) {
  Elem next = 0;
  for (int i = 0; i < 2; ++i) {
    shared_[i] = shared_positions(*parts_[i], spec_);
    to_sum_[i].assign(parts_[i]->size(), -1);
    ElemSet sh = sorted_ids(shared_[i]);
    for (Elem e = 0; e < parts_[i]->size(); ++e) {
      if (contains(sh, e)) continue;
      to_sum_[i][e] = next++;
      origin_.push_back({i, e});
    }
  }
}

std::pair<ElemSet, ElemSet> SumMatroid::split(const ElemSet& s) const {
  ElemSet a, b;
  for (Elem e : s) {
    auto [p, id] = origin_[e];
    (p == 0 ? a : b).push_back(id);
  }
  return {a, b};
}

int SumMatroid::rank_impl(const ElemSet& s) const { return rep_->rank(s); }

MatroidPtr SumMatroid::minor_impl(const ElemSet& contract,
                                  const ElemSet& del) const {
  auto [c1, c2] = split(contract);
  auto [d1, d2] = split(del);
  MatroidPtr m1 = parts_[0]->minor(c1, d1);
  MatroidPtr m2 = parts_[1]->minor(c2, d2);
  auto rep = std::dynamic_pointer_cast<const BinaryMatroid>(
      rep_->minor(contract, del));
  return std::make_shared<SumMatroid>(std::move(m1), std::move(m2), spec_,
                                      false, std::move(rep));
}

int SumMatroid::formula_rank(const ElemSet& s) const {
  check_elements(s);
  auto [x1, x2] = split(s);
  const int k = static_cast<int>(spec_.shared.size());
  ElemSet xt1 = set_union(x1, sorted_ids(shared_[0]));
  ElemSet xt2 = set_union(x2, sorted_ids(shared_[1]));
  int r = parts_[0]->rank(xt1) + parts_[1]->rank(xt2) - 2 * k;
  if (k == 0) return r;
  auto p1 = shared_patterns(*parts_[0], x1, shared_[0]);
  auto p2 = shared_patterns(*parts_[1], x2, shared_[1]);
  auto q1 = shared_patterns(*parts_[0], {}, shared_[0]);
  auto q2 = shared_patterns(*parts_[1], {}, shared_[1]);
  std::vector<unsigned> gens;
  int common = 0;
  for (unsigned m = 0; m < p1.size(); ++m) {
    if (p1[m] || p2[m]) gens.push_back(m);
    if (q1[m] && q2[m]) ++common;
  }
  return r + span_dim(gens) + std::countr_zero(static_cast<unsigned>(common));
}

bool SumMatroid::is_basis(const ElemSet& s) const {
  if (!checked_) return Matroid::is_basis(s);
  check_elements(s);
  if (static_cast<int>(s.size()) != full_rank()) return false;
  auto [x1, x2] = split(s);
  const Matroid& m1 = *parts_[0];
  const Matroid& m2 = *parts_[1];
  // Basis of M/Z where Z sits in the same part: r(X+Z) - r(Z) = |X| = r - r(Z).
  auto contracted_basis = [](const Matroid& m, const ElemSet& x,
                             const ElemSet& z) {
    const int rz = m.rank(z);
    return static_cast<int>(x.size()) == m.full_rank() - rz &&
           m.rank(set_union(x, z)) - rz == static_cast<int>(x.size());
  };
  auto deleted_basis = [](const Matroid& m, const ElemSet& x,
                          const ElemSet& z) {
    const int rd = m.rank(set_difference(m.ground(), z));
    return static_cast<int>(x.size()) == rd && m.is_independent(x);
  };
  if (spec_.arity == 1) return m1.is_basis(x1) && m2.is_basis(x2);
  ElemSet t1 = sorted_ids(shared_[0]);
  ElemSet t2 = sorted_ids(shared_[1]);
  if (contracted_basis(m1, x1, t1) && deleted_basis(m2, x2, t2)) return true;
  if (deleted_basis(m1, x1, t1) && contracted_basis(m2, x2, t2)) return true;
  if (spec_.arity == 2) return false;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      const int k = 3 - i - j;
      if (m1.is_basis(with(x1, shared_[0][i])) &&
          m1.is_basis(with(x1, shared_[0][j])) &&
          m2.is_basis(with(x2, shared_[1][i])) &&
          m2.is_basis(with(x2, shared_[1][k]))) {
        return true;
      }
    }
  }
  return false;
}

std::shared_ptr<const SumMatroid> compose_sum(MatroidPtr m1, MatroidPtr m2,
                                              const SumSpec& spec) {
  check_sum_spec(*m1, *m2, spec);
  return std::make_shared<SumMatroid>(std::move(m1), std::move(m2), spec, true);
}

std::shared_ptr<const BinaryMatroid> compose_binary(const Matroid& m1,
                                                    const Matroid& m2,
                                                    const SumSpec& spec) {
  const std::vector<Elem> t[2] = {shared_positions(m1, spec),
                                  shared_positions(m2, spec)};
  const Matroid* parts[2] = {&m1, &m2};
  const std::size_t k = spec.shared.size();
  std::vector<std::string> labels = sum_labels(m1, m2, spec);
  const std::size_t n = labels.size();

  // Each generator: (shared pattern, vector on the sum ground set).
  std::vector<BitVec> pattern;
  std::vector<BitVec> body;
  std::size_t offset = 0;
  for (int i = 0; i < 2; ++i) {
    auto rep = as_binary(*parts[i]);
    const std::size_t ni = parts[i]->size();
    std::vector<int> pos(ni, -1);
    std::vector<int> shared_slot(ni, -1);
    for (std::size_t s = 0; s < k; ++s) shared_slot[t[i][s]] = s;
    std::size_t next = offset;
    for (std::size_t e = 0; e < ni; ++e) {
      if (shared_slot[e] < 0) pos[e] = next++;
    }
    offset = next;
    std::vector<BitVec> cycles = nullspace(rep->rows(), ni);
    for (const BitVec& c : cycles) {
      BitVec p(k), b(n);
      for (std::size_t e = c.find_first(); e != BitVec::npos;
           e = c.find_next(e)) {
        if (shared_slot[e] >= 0) {
          p.set(shared_slot[e]);
        } else {
          b.set(pos[e]);
        }
      }
      pattern.push_back(p);
      body.push_back(b);
    }
  }
  // Combinations whose shared patterns cancel.
  const std::size_t g = pattern.size();
  std::vector<BitVec> sum_cycles;
  if (k == 0) {
    sum_cycles = body;
  } else if (g > 0) {
    std::vector<BitVec> constraint = transpose(pattern, k);
    for (const BitVec& lambda : nullspace(constraint, g)) {
      BitVec v(n);
      for (std::size_t a = lambda.find_first(); a != BitVec::npos;
           a = lambda.find_next(a)) {
        v ^= body[a];
      }
      sum_cycles.push_back(v);
    }
  }
  std::vector<BitVec> rows = nullspace(sum_cycles, n);
  return BinaryMatroid::from_rows(rows, std::move(labels));
}

}  // namespace symex
