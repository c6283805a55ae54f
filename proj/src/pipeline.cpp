// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#include "symex/pipeline.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "symex/errors.hpp"
#include "symex/gf2.hpp"
#include "symex/graphic_solver.hpp"
#include "symex/sum_composition.hpp"

namespace symex {

void fill_bounds(SolveReport& report) {
  const long long r = report.rank;
  if (report.mode == Mode::kGabow) {
    report.bound_length = r;
    report.bound_width = 1;
  } else if (report.graphic) {
    report.bound_length = r * r;
    report.bound_width = static_cast<int>(std::max(1LL, 2 * (r - 1)));
  } else {
    report.bound_length = 2 * r * r;
    report.bound_width = static_cast<int>(std::max(1LL, 4 * (r - 1)));
  }
}

// ---- sum cleanup ----------------------------------------------------------

namespace {

bool is_loop(const Matroid& m, Elem e) { return m.rank({e}) == 0; }

bool is_coloop(const Matroid& m, Elem e) {
  return m.rank(without(m.ground(), e)) < m.full_rank();
}

}  // namespace

MatroidPtr simplify_sum(MatroidPtr m) {
  auto s = std::dynamic_pointer_cast<const SumMatroid>(m);
  if (!s) return m;
  std::array<MatroidPtr, 2> p = {simplify_sum(s->part(0)),
                                 simplify_sum(s->part(1))};
  SumSpec spec = s->spec();
  if (spec.arity == 2) {
    const std::array<Elem, 2> t = {s->shared_ids(0)[0], s->shared_ids(1)[0]};
    for (int i = 0; i < 2 && spec.arity == 2; ++i) {
      const int j = 1 - i;
      // The sum splits into a direct sum once t is a loop or a coloop.
      if (is_loop(*p[i], t[i])) {
        p[i] = p[i]->minor({}, {t[i]});
        p[j] = p[j]->minor({t[j]}, {});
      } else if (is_coloop(*p[i], t[i])) {
        p[i] = p[i]->minor({}, {t[i]});
        p[j] = p[j]->minor({}, {t[j]});
      } else {
        continue;
      }
      spec = {1, {}};
    }
  }
  if (spec.arity == 1) {
    if (p[0]->size() == 0) return p[1];
    if (p[1]->size() == 0) return p[0];
  }
  if (p[0] == s->part(0) && p[1] == s->part(1) && spec.arity == s->arity()) {
    return m;
  }
  auto out = std::make_shared<SumMatroid>(p[0], p[1], spec, false,
                                          s->representation());
  return simplify_sum(out);
}

// ---- detection -----------------------------------------------------------

std::optional<std::vector<ElemSet>> detect_1sum(const Matroid& m) {
  ElemSet basis;
  for (Elem e = 0; e < m.size(); ++e) {
    ElemSet b = with(basis, e);
    if (m.rank(b) == static_cast<int>(b.size())) basis = b;
  }
  DisjointSets ds(m.size());
  for (Elem e = 0; e < m.size(); ++e) {
    if (contains(basis, e)) continue;
    for (Elem f : m.fundamental_circuit(basis, e)) ds.unite(e, f);
  }
  std::map<int, ElemSet> comps;
  for (Elem e = 0; e < m.size(); ++e) comps[ds.find(e)].push_back(e);
  if (comps.size() < 2) return std::nullopt;
  std::vector<ElemSet> out;
  for (auto& [root, c] : comps) out.push_back(c);
  return out;
}

namespace {

// Binary matroid on `elems` + marker. Its cycles are the projections of
// cycles of m onto `elems`, with the marker set exactly when the
// projection is not already a cycle of m restricted to `elems`.
MatroidPtr marked_part(const Matroid& m, const BinaryMatroid& rep,
                       const std::vector<BitVec>& cycles, const ElemSet& elems,
                       const std::string& marker) {
  const std::size_t k = elems.size();
  std::vector<BitVec> sub_cols;
  for (Elem e : elems) sub_cols.push_back(rep.columns()[e]);
  const std::vector<BitVec> inside =
      nullspace(transpose(sub_cols, rep.num_rows()), k);
  const int base_rank = gf2_rank(inside);
  std::vector<BitVec> gens;
  for (const BitVec& c : inside) {
    BitVec p = c;
    p.resize(k + 1);
    gens.push_back(p);
  }
  for (const BitVec& c : cycles) {
    BitVec p(k);
    for (std::size_t i = 0; i < k; ++i) p[i] = c[elems[i]];
    std::vector<BitVec> probe = inside;
    probe.push_back(p);
    const bool marked = gf2_rank(probe) > base_rank;
    p.resize(k + 1);
    p[k] = marked;
    gens.push_back(p);
  }
  std::vector<std::string> labels = m.labels_of(elems);
  labels.push_back(marker);
  return BinaryMatroid::from_rows(nullspace(gens, k + 1), std::move(labels));
}

std::string unused_label(const Matroid& m, const std::string& base) {
  std::set<std::string> used(m.labels().begin(), m.labels().end());
  std::string l = base;
  for (int i = 1; used.count(l); ++i) l = base + std::to_string(i);
  return l;
}

}  // namespace

std::optional<TwoSumDetection> detect_2sum_small(const Matroid& m, int cap,
                                                 std::string* warning) {
  const int n = m.size();
  if (n > cap || n > 62) {
    if (warning) {
      *warning = "2-sum detection skipped: " + std::to_string(n) +
                 " elements exceed the cap of " + std::to_string(cap);
    }
    return std::nullopt;
  }
  if (n < 4) return std::nullopt;
  auto rep = as_binary(m);
  const std::vector<BitVec> cycles = nullspace(rep->rows(), n);
  const int r = m.full_rank();
  const std::string marker = unused_label(m, "~t");
  // Element 0 always lies in A.
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
    ElemSet a = from_mask(mask);
    const int na = static_cast<int>(a.size());
    if (na < 2 || n - na < 2) continue;
    ElemSet b = set_difference(m.ground(), a);
    if (m.rank(a) + m.rank(b) != r + 1) continue;
    MatroidPtr pa = marked_part(m, *rep, cycles, a, marker);
    MatroidPtr pb = marked_part(m, *rep, cycles, b, marker);
    std::shared_ptr<const SumMatroid> sum;
    try {
      sum = compose_sum(pa, pb, {2, {marker}});
    } catch (const CompositionError&) {
      continue;
    }
    TwoSumDetection out{a, b, sum, a};
    out.to_original.insert(out.to_original.end(), b.begin(), b.end());
    // Same cycle space after reordering.
    auto srep = as_binary(*sum);
    std::vector<BitVec> mrows = rep->rows();
    bool same = gf2_rank(mrows) == gf2_rank(srep->rows());
    for (const BitVec& c : nullspace(srep->rows(), n)) {
      if (!same) break;
      BitVec o(n);
      for (std::size_t i = c.find_first(); i != BitVec::npos;
           i = c.find_next(i)) {
        o.set(out.to_original[i]);
      }
      for (const BitVec& row : mrows) {
        if ((row & o).count() % 2) same = false;
      }
    }
    if (same) return out;
  }
  return std::nullopt;
}

// ---- recursion -----------------------------------------------------------

namespace {

bool is_graphic_like(const Matroid& m) {
  return dynamic_cast<const GraphicMatroid*>(&m) ||
         dynamic_cast<const CographicMatroid*>(&m);
}

// Same element ids; valid for pairs with E = X1 + X2, where the two pairs
// of complements coincide.
std::shared_ptr<const GraphicMatroid> graphic_view(const MatroidPtr& m) {
  if (auto g = std::dynamic_pointer_cast<const GraphicMatroid>(m)) return g;
  auto c = std::dynamic_pointer_cast<const CographicMatroid>(m);
  return std::make_shared<GraphicMatroid>(c->graph(), c->labels());
}

std::string describe(const Matroid& m) {
  return m.kind() + " matroid with " + std::to_string(m.size()) +
         " elements and rank " + std::to_string(m.full_rank());
}

class Engine {
 public:
  Engine(Mode mode, const SolveOptions& opts, ReductionTrace* trace)
      : mode_(mode), opts_(opts), trace_(trace) {
    self_ = [this](const Instance& in) { return solve(in); };
  }

  ExchangeSequence solve(const Instance& in0) {
    Instance in = in0;
    in.m = simplify_sum(in.m);
    if (in.x == in.y) return {};
    if (!is_covering(in)) {
      return solve_via_reduced(delete_uncovered(in), self_, trace_);
    }
    if (!is_disjoint(in.x) || !is_disjoint(in.y)) {
      return solve_via_reduced(contract_common(in), self_, trace_);
    }
    const Matroid& m = *in.m;
    if (m.full_rank() <= 2) return solve_rank_le2(in);
    std::vector<std::string> notes;
    if (is_graphic_like(m)) {
      Instance g = in;
      g.m = graphic_view(in.m);
      try {
        return solve_graphic_white(g, trace_);
      } catch (const DomainError& err) {
        notes.push_back(err.what());
      }
    }
    if (m.kind() == "r10" || m.kind() == "f7") {
      return solve_exhaustive(in, mode_, m.size());
    }
    if (auto z = find_nontrivial_tight_set(m, in.x)) {
      return solve_via_tight(in, *z, self_, trace_);
    }
    ElemSet avoid = in.forbidden;
    if (in.last) avoid = with(avoid, *in.last);
    for (bool dual : {false, true}) {
      auto t = dual ? find_triangle(m, m.ground(), avoid)
                    : find_triad(m, m.ground(), avoid);
      if (!t) continue;
      try {
        return solve_via_triad(in, *t, dual, self_, trace_);
      } catch (const InternalError& err) {
        // Only the last-step conflict of the consistency fix lands here.
        notes.push_back(err.what());
      }
    }
    return structure(in, notes);
  }

 private:
  template <typename F>
  std::optional<ExchangeSequence> attempt(F&& f,
                                          std::vector<std::string>& notes) {
    try {
      return f();
    } catch (const DomainError& err) {
      notes.push_back(err.what());
    } catch (const InternalError& err) {
      notes.push_back(err.what());
    } catch (const UnsupportedError& err) {
      notes.push_back(err.what());
    }
    return std::nullopt;
  }

  std::optional<ExchangeSequence> solve_sum(
      const Instance& in, const std::shared_ptr<const SumMatroid>& s,
      std::vector<std::string>& notes) {
    if (s->arity() == 1) {
      ElemSet z;
      for (Elem e = 0; e < s->part(0)->size(); ++e) {
        z.push_back(s->from_part(0, e));
      }
      if (is_tight(*s, z)) return solve_via_tight(in, z, self_, trace_);
      return std::nullopt;
    }
    if (s->arity() == 2) {
      return attempt(
          [&] {
            TwoSumInstances sub = split_2sum(*s, in);
            if (trace_) {
              trace_->push_back({ReductionKind::kTwoSum, s->spec().shared,
                                 s->size(), s->full_rank()});
            }
            ExchangeSequence a = solve(sub.part[0]);
            ExchangeSequence b = solve(sub.part[1]);
            return merge_2sum(*s, sub, a, b);
          },
          notes);
    }
    for (int bullet : {1, 0}) {
      const Matroid& part = *s->part(bullet);
      const bool usable =
          mode_ == Mode::kWhite
              ? is_four_regular_graphic(part)
              : dynamic_cast<const GraphicMatroid*>(&part) != nullptr;
      if (!usable) continue;
      auto r = attempt(
          [&] {
            ThreeSumContext ctx = make_three_sum_context(s, bullet);
            return mode_ == Mode::kWhite
                       ? solve_3sum_white(ctx, in, self_, trace_)
                       : solve_3sum_gabow(ctx, in, self_, trace_);
          },
          notes);
      if (r) return r;
    }
    return std::nullopt;
  }

  ExchangeSequence structure(const Instance& in,
                             std::vector<std::string>& notes) {
    const Matroid& m = *in.m;
    if (auto s = std::dynamic_pointer_cast<const SumMatroid>(in.m)) {
      if (auto r = solve_sum(in, s, notes)) return *r;
    }
    if (auto comps = detect_1sum(m)) {
      for (const ElemSet& c : *comps) {
        if (is_tight(m, c)) return solve_via_tight(in, c, self_, trace_);
      }
    }
    if (m.size() > opts_.bfs_cap) {
      std::string msg =
          "irreducible " + describe(m) + " has no supported structure";
      if (!notes.empty()) msg += " (" + notes.back() + ")";
      throw UnsupportedError(msg);
    }
    std::string warning;
    if (auto det = detect_2sum_small(m, opts_.bfs_cap, &warning)) {
      const std::vector<Elem> inv = inverse_map(det->to_original, m.size());
      Instance d{det->sum,
                 {pulled(in.x.first, inv), pulled(in.x.second, inv)},
                 {pulled(in.y.first, inv), pulled(in.y.second, inv)},
                 pulled(in.forbidden, inv),
                 in.last ? std::optional<Elem>(inv[*in.last]) : std::nullopt};
      if (auto r = solve_sum(d, det->sum, notes)) {
        return mapped(*r, det->to_original);
      }
    }
    BfsOptions opts;
    opts.forbidden = in.forbidden;
    opts.monotone = mode_ == Mode::kGabow;
    opts.last = in.last;
    opts.cap = opts_.bfs_cap;
    BfsResult r = bfs_oracle(m, in.x, in.y, opts);
    if (!r.reachable) {
      throw DomainError("no exchange sequence reaches the target on the " +
                        describe(m));
    }
    return r.sequence;
  }

  Mode mode_;
  SolveOptions opts_;
  ReductionTrace* trace_;
  Solver self_;
};

SolveReport make_report(const Instance& inst, Mode mode, ExchangeSequence seq,
                        ReductionTrace trace) {
  SolveReport rep;
  rep.mode = mode;
  rep.length = static_cast<int>(seq.size());
  rep.width = sequence_width(seq);
  rep.sequence = std::move(seq);
  rep.size = inst.m->size();
  rep.rank = inst.m->full_rank();
  rep.graphic = dynamic_cast<const GraphicMatroid*>(inst.m.get()) != nullptr;
  rep.trace = std::move(trace);
  fill_bounds(rep);
  return rep;
}

void replay_or_throw(const Instance& inst, const ExchangeSequence& seq) {
  BasisPair end = apply_and_validate(*inst.m, inst.x, seq, inst.forbidden);
  if (end != inst.y) throw InternalError("sequence ends at the wrong pair");
}

}  // namespace

SolveReport solve_white(const Instance& inst, const SolveOptions& opts) {
  check_instance(inst);
  ReductionTrace trace;
  Engine engine(Mode::kWhite, opts, &trace);
  ExchangeSequence seq = engine.solve(inst);
  replay_or_throw(inst, seq);
  return make_report(inst, Mode::kWhite, std::move(seq), std::move(trace));
}

SolveReport solve_gabow(MatroidPtr m, const BasisPair& x,
                        std::optional<Elem> last, const SolveOptions& opts) {
  Instance inst{std::move(m), x, swapped(x), {}, last};
  check_instance(inst);
  if (!is_disjoint(x)) throw DomainError("reversal needs disjoint bases");
  if (last && !contains(x.first, *last) && !contains(x.second, *last)) {
    throw DomainError("last-step element is not in either basis");
  }
  ReductionTrace trace;
  Engine engine(Mode::kGabow, opts, &trace);
  ExchangeSequence seq = engine.solve(inst);
  replay_or_throw(inst, seq);
  if (!is_strictly_monotone(inst.x, inst.y, seq)) {
    throw InternalError("reversal is not strictly monotone");
  }
  if (last && !seq.empty() && seq.back().e != *last && seq.back().f != *last) {
    throw InternalError("reversal does not end with the last-step element");
  }
  return make_report(inst, Mode::kGabow, std::move(seq), std::move(trace));
}

// ---- trees ---------------------------------------------------------------

MatroidPtr compose_tree(const DecompositionTree& tree) {
  if (tree.nodes.empty()) throw CompositionError("tree has no nodes");
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(tree.nodes.size()); ++i) {
    if (!index.emplace(tree.nodes[i].id, i).second) {
      throw CompositionError("node id '" + tree.nodes[i].id + "' repeated");
    }
  }
  if (tree.sums.size() + 1 != tree.nodes.size()) {
    throw CompositionError("a tree on n nodes needs n - 1 sums");
  }
  std::vector<std::vector<std::pair<int, int>>> adj(tree.nodes.size());
  for (int k = 0; k < static_cast<int>(tree.sums.size()); ++k) {
    const TreeSum& s = tree.sums[k];
    auto a = index.find(s.a);
    auto b = index.find(s.b);
    if (a == index.end() || b == index.end()) {
      throw CompositionError("sum refers to an unknown node");
    }
    if (a->second == b->second) {
      throw CompositionError("sum joins a node to itself");
    }
    adj[a->second].push_back({k, b->second});
    adj[b->second].push_back({k, a->second});
  }
  std::vector<bool> seen(tree.nodes.size(), false);
  std::function<MatroidPtr(int)> fold = [&](int v) {
    seen[v] = true;
    MatroidPtr acc = tree.nodes[v].m;
    for (auto [k, w] : adj[v]) {
      if (seen[w]) continue;
      const TreeSum& s = tree.sums[k];
      acc = compose_sum(acc, fold(w), {s.arity, s.shared});
    }
    return acc;
  };
  MatroidPtr out = fold(0);
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw CompositionError("tree is not connected");
  }
  return out;
}

DecompositionTree k34_gadget_tree() {
  auto ab = [](int p, int q) {
    return "a" + std::to_string(p) + "b" + std::to_string(q);
  };
  DecompositionTree tree;
  Graph core;
  std::vector<std::string> core_labels;
  for (int p = 1; p <= 3; ++p) core.add_vertex("a" + std::to_string(p));
  for (int q = 1; q <= 4; ++q) core.add_vertex("b" + std::to_string(q));
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 4; ++q) {
      core.add_edge(p - 1, 3 + q - 1);
      core_labels.push_back(ab(p, q));
    }
  }
  tree.nodes.push_back({"core", "cographic",
                        std::make_shared<CographicMatroid>(core, core_labels)});
  for (int i = 1; i <= 4; ++i) {
    const std::string pre = "h" + std::to_string(i) + ".";
    Graph g;
    for (int p = 1; p <= 3; ++p) g.add_vertex("a" + std::to_string(p));
    for (int q = 1; q <= 4; ++q) g.add_vertex("b" + std::to_string(q));
    for (int w = 1; w <= 3; ++w) g.add_vertex("w" + std::to_string(w));
    auto a = [](int p) { return p - 1; };
    auto b = [](int q) { return 3 + q - 1; };
    auto w = [](int k) { return 7 + k - 1; };
    std::vector<std::string> labels;
    for (int p = 1; p <= 3; ++p) {
      for (int q = 1; q <= 4; ++q) {
        if (p == 1 && q == 1) continue;
        g.add_edge(a(p), b(q));
        labels.push_back(pre + ab(p, q));
      }
    }
    const std::vector<std::tuple<int, int, std::string>> extra = {
        {w(1), a(1), "w1a1"}, {w(1), b(1), "w1b1"}, {w(2), b(1), "w2b1"},
        {w(2), b(2), "w2b2"}, {w(3), b(3), "w3b3"}, {w(3), b(4), "w3b4"}};
    for (const auto& [u, v, l] : extra) {
      g.add_edge(u, v);
      labels.push_back(pre + l);
    }
    // The triangle carries the labels of the core star at b_i.
    g.add_edge(w(1), w(2));
    labels.push_back(ab(1, i));
    g.add_edge(w(2), w(3));
    labels.push_back(ab(2, i));
    g.add_edge(w(3), w(1));
    labels.push_back(ab(3, i));
    const std::string id = "gadget" + std::to_string(i);
    tree.nodes.push_back(
        {id, "graphic", std::make_shared<GraphicMatroid>(g, labels)});
    tree.sums.push_back({"core", id, 3, {ab(1, i), ab(2, i), ab(3, i)}});
  }
  return tree;
}

}  // namespace symex
