// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#include "symex/sum_composition.hpp"

#include <algorithm>

#include "symex/graphic_solver.hpp"
#include "symex/union_partition.hpp"

namespace symex {

namespace {

bool uses(const ExchangeStep& s, Elem e) { return s.e == e || s.f == e; }

int count_uses(const ExchangeSequence& seq, Elem e) {
  int c = 0;
  for (const auto& s : seq) c += uses(s, e);
  return c;
}

// Part-local ids of the pair halves, ordered by part index.
struct SplitPair {
  std::array<ElemSet, 2> first;
  std::array<ElemSet, 2> second;
};

SplitPair split_pair(const SumMatroid& m, const BasisPair& p) {
  auto [a1, b1] = m.split(p.first);
  auto [a2, b2] = m.split(p.second);
  return {{a1, b1}, {a2, b2}};
}

ReductionCertificate certificate(const Matroid& m, ReductionKind kind,
                                 const ElemSet& payload_ids,
                                 const Matroid& payload_owner) {
  return {kind, payload_owner.labels_of(payload_ids), m.size(), m.full_rank()};
}

}  // namespace

// ---- 2-sums ---------------------------------------------------------------

TwoSumInstances split_2sum(const SumMatroid& m, const Instance& inst) {
  if (m.arity() != 2) throw DomainError("split_2sum needs a 2-sum");
  if (!is_covering(inst) || !is_disjoint(inst.x) || !is_disjoint(inst.y)) {
    throw DomainError("split_2sum needs disjoint covering pairs");
  }
  const Matroid& p0 = *m.part(0);
  const Matroid& p1 = *m.part(1);
  const Elem t0 = m.shared_ids(0)[0];
  const Elem t1 = m.shared_ids(1)[0];
  // Adds t to the side where the restricted half is not yet a basis.
  auto assign = [&](const ElemSet& s) {
    auto [a, b] = m.split(s);
    if (p0.is_basis(a)) {
      b = with(b, t1);
      if (!p1.is_basis(b)) throw InternalError("not a basis of the 2-sum");
    } else {
      a = with(a, t0);
      if (!p0.is_basis(a) || !p1.is_basis(b)) {
        throw InternalError("not a basis of the 2-sum");
      }
    }
    return std::pair{a, b};
  };
  auto [x1a, x1b] = assign(inst.x.first);
  auto [x2a, x2b] = assign(inst.x.second);
  auto [y1a, y1b] = assign(inst.y.first);
  auto [y2a, y2b] = assign(inst.y.second);
  if (contains(x1a, t0) == contains(x2a, t0) ||
      contains(y1a, t0) == contains(y2a, t0)) {
    throw InternalError("one side of the 2-sum is a tight set");
  }
  auto [fa, fb] = m.split(inst.forbidden);
  TwoSumInstances out;
  out.part[0] = {m.part(0), {x1a, x2a}, {y1a, y2a}, fa, std::nullopt};
  out.part[1] = {m.part(1), {x1b, x2b}, {y1b, y2b}, fb, std::nullopt};
  if (inst.last) {
    auto [ha, hb] = m.split({*inst.last});
    const int side = ha.empty() ? 1 : 0;
    out.part[side].last = side == 0 ? ha[0] : hb[0];
    out.part[1 - side].last = side == 0 ? t1 : t0;
  }
  return out;
}

ExchangeSequence merge_2sum(const SumMatroid& m, const TwoSumInstances& sub,
                            const ExchangeSequence& seq0,
                            const ExchangeSequence& seq1) {
  const std::array<Elem, 2> t = {m.shared_ids(0)[0], m.shared_ids(1)[0]};
  const std::array<const ExchangeSequence*, 2> seq = {&seq0, &seq1};
  const std::array<int, 2> uses_t = {count_uses(seq0, t[0]),
                                     count_uses(seq1, t[1])};
  auto lift = [&](int side, const ExchangeStep& s) -> ExchangeStep {
    return {m.from_part(side, s.e), m.from_part(side, s.f)};
  };
  // The side asked to end with t runs first in every round.
  int p1 = 0;
  if (sub.part[1].last && *sub.part[1].last == t[1]) p1 = 1;
  const int p2 = 1 - p1;

  ExchangeSequence out;
  std::array<std::size_t, 2> idx = {0, 0};
  const int rounds = std::min(uses_t[0], uses_t[1]);
  for (int r = 0; r < rounds; ++r) {
    for (int side : {p1, p2}) {
      while (!uses((*seq[side])[idx[side]], t[side])) {
        out.push_back(lift(side, (*seq[side])[idx[side]++]));
      }
    }
    const ExchangeStep& a = (*seq[0])[idx[0]++];
    const ExchangeStep& b = (*seq[1])[idx[1]++];
    const bool a_out = a.e == t[0];
    const bool b_out = b.e == t[1];
    if (a_out == b_out)
      throw InternalError("t moves the same way on both sides");
    ExchangeStep c;
    c.e = a_out ? m.from_part(1, b.e) : m.from_part(0, a.e);
    c.f = a.f == t[0] ? m.from_part(1, b.f) : m.from_part(0, a.f);
    out.push_back(c);
  }
  auto remaining_t = [&](int side) {
    for (std::size_t i = idx[side]; i < seq[side]->size(); ++i) {
      if (uses((*seq[side])[i], t[side])) return true;
    }
    return false;
  };
  const int q = remaining_t(p1) ? p2 : p1;
  const int rside = 1 - q;
  for (; idx[q] < seq[q]->size(); ++idx[q]) {
    out.push_back(lift(q, (*seq[q])[idx[q]]));
  }
  Elem e_sum = -1;
  if (remaining_t(rside)) {
    const Matroid& pq = *m.part(q);
    const BasisPair& yq = sub.part[q].y;
    const bool t_first = contains(yq.first, t[q]);
    const ElemSet& other = t_first ? yq.second : yq.first;
    for (Elem g : other) {
      if (contains(sub.part[q].forbidden, g)) continue;
      ExchangeStep s = t_first ? ExchangeStep{t[q], g} : ExchangeStep{g, t[q]};
      if (is_valid_exchange(pq, yq, s)) {
        e_sum = m.from_part(q, g);
        break;
      }
    }
    if (e_sum < 0) throw InternalError("no substitute for t in the 2-sum");
  }
  for (; idx[rside] < seq[rside]->size(); ++idx[rside]) {
    const ExchangeStep& s = (*seq[rside])[idx[rside]];
    ExchangeStep c;
    c.e = s.e == t[rside] ? e_sum : m.from_part(rside, s.e);
    c.f = s.f == t[rside] ? e_sum : m.from_part(rside, s.f);
    out.push_back(c);
  }
  return out;
}

// ---- 3-sums ---------------------------------------------------------------

ThreeSumContext ThreeSumContext::relabeled(
    const std::array<int, 3>& order) const {
  ThreeSumContext out = *this;
  for (int i = 0; i < 3; ++i) {
    out.t_circ[i] = t_circ[order[i]];
    out.t_bullet[i] = t_bullet[order[i]];
  }
  return out;
}

ThreeSumContext make_three_sum_context(std::shared_ptr<const SumMatroid> sum,
                                       int bullet) {
  if (sum->arity() != 3) throw DomainError("not a 3-sum");
  if (bullet != 0 && bullet != 1) throw DomainError("bullet must be 0 or 1");
  ThreeSumContext ctx;
  ctx.bullet = bullet;
  ctx.circ = 1 - bullet;
  for (int i = 0; i < 3; ++i) {
    ctx.t_circ[i] = sum->shared_ids(ctx.circ)[i];
    ctx.t_bullet[i] = sum->shared_ids(ctx.bullet)[i];
  }
  ctx.sum = std::move(sum);
  return ctx;
}

PairType classify_pair(const ThreeSumContext& ctx, const BasisPair& z) {
  const SplitPair sp = split_pair(*ctx.sum, z);
  const Matroid& mc = ctx.circ_part();
  const Matroid& mb = ctx.bullet_part();
  const int rc = mc.full_rank();
  PairType out;
  const int n1 = static_cast<int>(sp.first[ctx.circ].size());
  if (n1 == rc - 2) {
    out.type = 1;
  } else if (n1 == rc - 1) {
    out.type = 2;
  } else {
    throw InternalError("pair is not a disjoint basis pair of the 3-sum");
  }
  const ElemSet& zc = out.type == 1 ? sp.second[ctx.circ] : sp.first[ctx.circ];
  const ElemSet& zb =
      out.type == 1 ? sp.second[ctx.bullet] : sp.first[ctx.bullet];
  std::vector<int> cpass, bpass;
  for (int a = 0; a < 3; ++a) {
    if (mc.is_basis(with(zc, ctx.t_circ[a]))) cpass.push_back(a);
    if (mb.is_basis(with(zb, ctx.t_bullet[a]))) bpass.push_back(a);
  }
  if (cpass.size() != 2 || bpass.size() != 2 || cpass == bpass) {
    throw InternalError("3-sum pair type conditions fail");
  }
  for (int a : cpass) {
    if (std::find(bpass.begin(), bpass.end(), a) != bpass.end()) out.i = a;
  }
  for (int a : cpass) {
    if (a != out.i) out.j = a;
  }
  for (int a : bpass) {
    if (a != out.i) out.k = a;
  }
  return out;
}

TriangleSplit triangle_split_partition(const Matroid& m, const ElemSet& t) {
  if (m.size() != 2 * m.full_rank() + 1) {
    throw DomainError("triangle split needs |E| = 2r + 1");
  }
  if (t.size() != 3 || !is_triangle(m, t)) {
    throw DomainError("triangle split needs a triangle");
  }
  const ElemSet rest = set_difference(m.ground(), t);
  MatroidPtr mr = m.restriction(rest);
  MatroidPtr mc = m.contraction(t);
  UnionPartition u = matroid_union_partition(*mr, *mc, mr->ground());
  TriangleSplit out;
  auto back = [&](const ElemSet& s) {
    ElemSet o;
    for (Elem e : s) o.push_back(rest[e]);
    return o;
  };
  out.feasible = u.feasible &&
                 static_cast<int>(u.first.size()) == m.full_rank() &&
                 static_cast<int>(u.second.size()) == m.full_rank() - 2;
  if (out.feasible) {
    out.basis = back(u.first);
    out.contracted_basis = back(u.second);
  } else {
    out.witness = back(u.witness);
  }
  return out;
}

std::optional<std::vector<int>> sparsity_violation(const Graph& g,
                                                   const ElemSet& t) {
  const ElemSet rest = set_difference(full_set(g.num_edges()), t);
  Graph base;
  base.num_vertices = g.num_vertices;
  base.vertex_names = g.vertex_names;
  for (Elem e : rest) base.edges.push_back(g.edges[e]);
  const int n = static_cast<int>(rest.size());
  std::vector<std::string> labels(n + 1);
  for (int i = 0; i <= n; ++i) labels[i] = std::to_string(i);
  for (int i = 0; i < n; ++i) {
    // (2,3)-sparse iff every single edge can be doubled inside two forests.
    Graph doubled = base;
    doubled.edges.push_back(base.edges[i]);
    GraphicMatroid m(doubled, labels);
    UnionPartition u = matroid_union_partition(m, m, m.ground());
    if (u.feasible) continue;
    // Some component of the witness is itself overfull.
    DisjointSets ds(g.num_vertices);
    for (Elem e : u.witness)
      ds.unite(doubled.edges[e].first, doubled.edges[e].second);
    std::vector<int> edges_in(g.num_vertices, 0), verts_in(g.num_vertices, 0);
    std::vector<bool> touched(g.num_vertices, false);
    for (Elem e : u.witness) {
      edges_in[ds.find(doubled.edges[e].first)]++;
      touched[doubled.edges[e].first] = touched[doubled.edges[e].second] = true;
    }
    for (int v = 0; v < g.num_vertices; ++v) {
      if (touched[v]) verts_in[ds.find(v)]++;
    }
    for (int root = 0; root < g.num_vertices; ++root) {
      if (verts_in[root] < 2 || edges_in[root] <= 2 * (verts_in[root] - 1)) {
        continue;
      }
      std::vector<int> u_set;
      for (int v = 0; v < g.num_vertices; ++v) {
        if (touched[v] && ds.find(v) == root) u_set.push_back(v);
      }
      return u_set;
    }
    throw InternalError("union witness has no overfull component");
  }
  return std::nullopt;
}

namespace {

bool spanning_tree(const Graph& g, const ElemSet& s) {
  return static_cast<int>(s.size()) == g.num_vertices - 1 &&
         forest_rank(g, s) == g.num_vertices - 1;
}

int other_end(const Graph& g, Elem e, int v) {
  return g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
}

}  // namespace

RegularPartition regular_triangle_partition(const Graph& g,
                                            const std::array<Elem, 3>& t) {
  if (!is_simple(g))
    throw DomainError("triangle partition needs a simple graph");
  for (int d : g.degrees()) {
    if (d != 4) throw DomainError("triangle partition needs a 4-regular graph");
  }
  for (Elem e : t) {
    if (e < 0 || e >= g.num_edges()) throw DomainError("edge out of range");
  }
  // v1 is shared by t2 and t3; t1 joins the other two ends.
  auto [p2, q2] = g.edges[t[1]];
  auto [p3, q3] = g.edges[t[2]];
  int v1 = -1;
  if (p2 == p3 || p2 == q3) v1 = p2;
  if (q2 == p3 || q2 == q3) v1 = q2;
  if (v1 < 0) throw DomainError("t2 and t3 do not meet");
  const int v3 = other_end(g, t[1], v1);
  const int v2 = other_end(g, t[2], v1);
  auto [p1, q1] = g.edges[t[0]];
  if (!((p1 == v2 && q1 == v3) || (p1 == v3 && q1 == v2))) {
    throw DomainError("edges do not form a triangle");
  }
  const ElemSet tset = normalized({t[0], t[1], t[2]});
  if (auto w = sparsity_violation(g, tset)) {
    throw SparsityError("sparsity precondition fails", *w);
  }
  // a < b are the other neighbours of v1.
  std::vector<std::pair<int, Elem>> nb;
  for (Elem e : g.star(v1)) {
    if (e != t[1] && e != t[2]) nb.push_back({other_end(g, e, v1), e});
  }
  std::sort(nb.begin(), nb.end());
  const int a = nb[0].first;
  const Elem v1a = nb[0].second;
  const Elem v1b = nb[1].second;
  std::vector<std::pair<int, Elem>> un;
  for (Elem e : g.star(a)) {
    if (e != v1a) un.push_back({other_end(g, e, a), e});
  }
  std::sort(un.begin(), un.end());

  // G' = G - {v1, a} - t1 + {f1, f2, f3}, f_i = u_{i+1} u_{i+2}.
  std::vector<int> vid(g.num_vertices, -1);
  Graph gp;
  for (int v = 0; v < g.num_vertices; ++v) {
    if (v != v1 && v != a) vid[v] = gp.add_vertex(g.vertex_names[v]);
  }
  std::vector<Elem> orig;
  for (Elem e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edges[e];
    if (e == t[0] || u == v1 || v == v1 || u == a || v == a) continue;
    gp.add_edge(vid[u], vid[v]);
    orig.push_back(e);
  }
  const int base = gp.num_edges();
  for (int i = 0; i < 3; ++i) {
    gp.add_edge(vid[un[(i + 1) % 3].first], vid[un[(i + 2) % 3].first]);
  }
  std::vector<std::string> labels(gp.num_edges());
  for (int i = 0; i < gp.num_edges(); ++i) labels[i] = std::to_string(i);
  GraphicMatroid mp(gp, labels);
  TriangleSplit part = triangle_split_partition(mp, {base, base + 1, base + 2});
  if (!part.feasible) {
    throw InternalError("reduced graph has no partition despite sparsity");
  }
  RegularPartition out;
  for (Elem e : part.contracted_basis) out.f1.push_back(orig[e]);
  for (Elem e : part.basis) out.f2.push_back(orig[e]);
  for (const auto& [u, e] : un) out.f1.push_back(e);
  out.f1.push_back(v1b);
  out.f2.push_back(v1a);
  out.f1 = normalized(out.f1);
  out.f2 = normalized(out.f2);
  out.e = v1b;
  const ElemSet f1e = without(out.f1, out.e);
  const bool ok =
      spanning_tree(g, out.f1) && spanning_tree(g, with(out.f2, t[1])) &&
      spanning_tree(g, with(out.f2, t[2])) &&
      spanning_tree(g, with(f1e, t[1])) && spanning_tree(g, with(f1e, t[2])) &&
      spanning_tree(g, with(out.f2, out.e));
  if (!ok) throw InternalError("triangle partition fails a tree check");
  return out;
}

RegularPartition regular_triangle_partition(const Graph& g, const ElemSet& t) {
  if (t.size() != 3) throw DomainError("a triangle has three edges");
  int v1 = g.num_vertices;
  for (Elem e : t)
    v1 = std::min({v1, g.edges.at(e).first, g.edges.at(e).second});
  // t1 is the edge not incident to v1.
  std::array<Elem, 3> order{};
  int k = 1;
  for (Elem e : t) {
    if (g.edges[e].first != v1 && g.edges[e].second != v1) {
      order[0] = e;
    } else if (k < 3) {
      order[k++] = e;
    }
  }
  if (k != 3) throw DomainError("edges do not form a triangle");
  return regular_triangle_partition(g, order);
}

bool is_four_regular_graphic(const Matroid& m) {
  auto g = dynamic_cast<const GraphicMatroid*>(&m);
  if (!g || !is_simple(g->graph())) return false;
  int used = 0;
  for (int d : g->graph().degrees()) {
    if (d != 0 && d != 4) return false;
    used += d > 0;
  }
  return used > 0;
}

namespace {

Graph bullet_graph(const ThreeSumContext& ctx) {
  if (!is_four_regular_graphic(ctx.bullet_part())) {
    throw DomainError("bullet side is not a simple 4-regular graph");
  }
  return drop_isolated(
      static_cast<const GraphicMatroid&>(ctx.bullet_part()).graph());
}

void check_disjoint_covering(const Instance& inst) {
  if (!is_covering(inst) || !is_disjoint(inst.x) || !is_disjoint(inst.y)) {
    throw DomainError("3-sum solver needs disjoint covering pairs");
  }
}

void validate_or_throw(const Instance& inst, const ExchangeSequence& seq) {
  try {
    if (apply_and_validate(*inst.m, inst.x, seq, inst.forbidden) != inst.y) {
      throw InternalError("3-sum replay ends at the wrong pair");
    }
  } catch (const ValidationError& err) {
    throw InternalError(std::string("3-sum replay invalid: ") + err.what());
  }
}

}  // namespace

ExchangeSequence solve_3sum_white(const ThreeSumContext& ctx0,
                                  const Instance& inst, const Solver& recurse,
                                  ReductionTrace* trace) {
  if (!inst.forbidden.empty()) {
    throw DomainError("3-sum solver does not take a forbidden set");
  }
  check_disjoint_covering(inst);
  if (inst.x == inst.y) return {};
  const SumMatroid& m = *ctx0.sum;
  const PairType tx0 = classify_pair(ctx0, inst.x);
  if (tx0.type == 2) {
    Instance sw = inst;
    sw.x = swapped(inst.x);
    sw.y = swapped(inst.y);
    return flipped(solve_3sum_white(ctx0, sw, recurse, trace));
  }
  const PairType ty0 = classify_pair(ctx0, inst.y);
  // Relabel so that t1 completes both circ-side sets.
  int common = -1;
  for (int a = 2; a >= 0; --a) {
    if ((a == tx0.i || a == tx0.j) && (a == ty0.i || a == ty0.j)) common = a;
  }
  std::array<int, 3> order = {common, -1, -1};
  for (int a = 0, k = 1; a < 3; ++a) {
    if (a != common) order[k++] = a;
  }
  const ThreeSumContext ctx = ctx0.relabeled(order);
  const PairType tx = classify_pair(ctx, inst.x);
  const PairType ty = classify_pair(ctx, inst.y);
  const Graph g = bullet_graph(ctx);
  const RegularPartition part = regular_triangle_partition(
      g,
      std::array<Elem, 3>{ctx.t_bullet[0], ctx.t_bullet[1], ctx.t_bullet[2]});
  if (trace) {
    trace->push_back(
        certificate(m, ReductionKind::kThreeSum,
                    normalized({ctx.t_circ[0], ctx.t_circ[1], ctx.t_circ[2]}),
                    ctx.circ_part()));
  }
  const SplitPair xs = split_pair(m, inst.x);
  const SplitPair ys = split_pair(m, inst.y);
  const int c = ctx.circ, b = ctx.bullet;
  const MatroidPtr& bullet = m.part(b);
  ExchangeSequence out;
  auto lift_bullet = [&](const ExchangeSequence& seq) {
    for (const auto& s : seq) {
      ExchangeStep o{m.from_part(b, s.e), m.from_part(b, s.f)};
      if (o.e < 0 || o.f < 0) throw InternalError("bullet step uses T");
      out.push_back(o);
    }
  };

  // (1) bullet side, t_k(X) frozen in the second basis.
  const Elem tkx = ctx.t_bullet[tx.k];
  Instance s1{bullet,
              {xs.first[b], with(xs.second[b], tkx)},
              {part.f1, with(part.f2, tkx)},
              {tkx},
              std::nullopt};
  lift_bullet(solve_graphic_white(s1, trace));

  // (2) circ side in M_circ / t1, with e standing in for t2.
  MatroidPtr child = m.part(c)->contraction({ctx.t_circ[0]});
  std::vector<Elem> cmap;  // child id -> circ id
  for (Elem e = 0; e < m.part(c)->size(); ++e) {
    if (e != ctx.t_circ[0]) cmap.push_back(e);
  }
  const std::vector<Elem> cinv = inverse_map(cmap, m.part(c)->size());
  const Elem t2 = ctx.t_circ[1];
  const Elem t3 = ctx.t_circ[2];
  BasisPair x2{pulled(with(xs.first[c], t2), cinv), pulled(xs.second[c], cinv)};
  BasisPair y2 = ty.type == 1 ? BasisPair{pulled(with(ys.first[c], t2), cinv),
                                          pulled(ys.second[c], cinv)}
                              : BasisPair{pulled(ys.first[c], cinv),
                                          pulled(with(ys.second[c], t2), cinv)};
  const Elem e_sum = m.from_part(b, part.e);
  ExchangeSequence seq2 = recurse({child, x2, y2, {}, std::nullopt});
  for (const auto& s : seq2) {
    ExchangeStep o;
    for (auto [src, dst] : {std::pair{s.e, &o.e}, std::pair{s.f, &o.f}}) {
      const Elem ce = cmap[src];
      if (ce == t3) throw InternalError("circ sequence uses t3");
      *dst = ce == t2 ? e_sum : m.from_part(c, ce);
    }
    out.push_back(o);
  }

  // (3) bullet side back to y, t_k(Y) frozen.
  ElemSet g1 = part.f1, g2 = part.f2;
  if (ty.type == 2) {
    g1 = without(g1, part.e);
    g2 = with(g2, part.e);
  }
  const Elem tky = ctx.t_bullet[ty.k];
  Instance s3{bullet, {}, {}, {tky}, std::nullopt};
  if (ty.type == 1) {
    s3.x = {g1, with(g2, tky)};
    s3.y = {ys.first[b], with(ys.second[b], tky)};
  } else {
    s3.x = {with(g1, tky), g2};
    s3.y = {with(ys.first[b], tky), ys.second[b]};
  }
  lift_bullet(solve_graphic_white(s3, trace));
  validate_or_throw(inst, out);
  return out;
}

ExchangeSequence solve_3sum_gabow(const ThreeSumContext& ctx0,
                                  const Instance& inst, const Solver& recurse,
                                  ReductionTrace* trace) {
  check_disjoint_covering(inst);
  if (inst.y != swapped(inst.x)) {
    throw DomainError("3-sum gabow solver needs y = reversed x");
  }
  const SumMatroid& m = *ctx0.sum;
  const PairType tx0 = classify_pair(ctx0, inst.x);
  if (tx0.type == 2) {
    Instance sw = inst;
    sw.x = swapped(inst.x);
    sw.y = inst.x;
    return flipped(solve_3sum_gabow(ctx0, sw, recurse, trace));
  }
  const ThreeSumContext ctx = ctx0.relabeled({tx0.i, tx0.j, tx0.k});
  const int c = ctx.circ, b = ctx.bullet;
  if (!is_four_regular_graphic(ctx.bullet_part()) &&
      dynamic_cast<const GraphicMatroid*>(&ctx.bullet_part()) == nullptr) {
    throw DomainError("bullet side is not graphic");
  }
  if (trace) {
    trace->push_back(
        certificate(m, ReductionKind::kThreeSum,
                    normalized({ctx.t_circ[0], ctx.t_circ[1], ctx.t_circ[2]}),
                    ctx.circ_part()));
  }
  const SplitPair xs = split_pair(m, inst.x);
  const Elem t1 = ctx.t_circ[0], t2 = ctx.t_circ[1], t3 = ctx.t_circ[2];

  // Monotone reversal in M_circ / t2.
  MatroidPtr child = m.part(c)->contraction({t2});
  std::vector<Elem> cmap;
  for (Elem e = 0; e < m.part(c)->size(); ++e) {
    if (e != t2) cmap.push_back(e);
  }
  const std::vector<Elem> cinv = inverse_map(cmap, m.part(c)->size());
  BasisPair p{pulled(with(xs.first[c], t1), cinv), pulled(xs.second[c], cinv)};
  std::optional<Elem> child_last;
  if (inst.last) {
    auto [h0, h1] = m.split({*inst.last});
    const ElemSet& hc = c == 0 ? h0 : h1;
    if (hc.empty()) {
      throw UnsupportedError("last element on the graphic side of a 3-sum");
    }
    child_last = cinv[hc[0]];
  }
  ExchangeSequence s = recurse({child, p, swapped(p), {}, child_last});
  const Elem t1c = cinv[t1];
  int ell = -1;
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    if (uses(s[i], t1c)) {
      if (ell >= 0) throw InternalError("t1 used twice in a monotone reversal");
      ell = i;
    }
  }
  if (ell < 0 || s[ell].e != t1c) {
    throw InternalError("monotone reversal does not move t1 out");
  }
  BasisPair state = p;
  for (int i = 0; i < ell; ++i) state = apply_step(state, s[i]);
  const Elem e_circ = cmap[s[ell].f];
  ElemSet y2;
  for (Elem e : state.second) y2.push_back(cmap[e]);
  y2 = normalized(y2);
  const Matroid& mc = ctx.circ_part();
  const bool with_t1 = mc.is_basis(with(y2, t1));
  const bool with_t3 = mc.is_basis(with(y2, t3));
  if (with_t1 == with_t3) throw InternalError("none-or-two rule violated");
  const int j = with_t1 ? 2 : 0;
  const Elem tj = ctx.t_bullet[j];

  // Graphic reversal on M_bullet restricted to E_bullet - T + t_j.
  ElemSet drop;
  for (int a = 0; a < 3; ++a) {
    if (a != j) drop.push_back(ctx.t_bullet[a]);
  }
  drop = normalized(drop);
  auto minor = std::dynamic_pointer_cast<const GraphicMatroid>(
      m.part(b)->minor({}, drop));
  if (!minor) throw DomainError("bullet side is not graphic");
  std::vector<Elem> bmap;
  for (Elem e = 0; e < m.part(b)->size(); ++e) {
    if (!contains(drop, e)) bmap.push_back(e);
  }
  const std::vector<Elem> binv = inverse_map(bmap, m.part(b)->size());
  BasisPair q{pulled(xs.first[b], binv), pulled(with(xs.second[b], tj), binv)};
  ExchangeSequence gs = solve_graphic_gabow(*minor, q, binv[tj], trace);
  if (gs.empty() || gs.back().f != binv[tj]) {
    throw InternalError("graphic reversal does not end with t_j");
  }

  ExchangeSequence out;
  auto lift_circ = [&](const ExchangeStep& st) {
    return ExchangeStep{m.from_part(c, cmap[st.e]), m.from_part(c, cmap[st.f])};
  };
  for (int i = 0; i < ell; ++i) out.push_back(lift_circ(s[i]));
  for (std::size_t i = 0; i + 1 < gs.size(); ++i) {
    out.push_back(
        {m.from_part(b, bmap[gs[i].e]), m.from_part(b, bmap[gs[i].f])});
  }
  out.push_back({m.from_part(b, bmap[gs.back().e]), m.from_part(c, e_circ)});
  for (std::size_t i = ell + 1; i < s.size(); ++i)
    out.push_back(lift_circ(s[i]));
  for (const auto& st : out) {
    if (st.e < 0 || st.f < 0) throw InternalError("3-sum step uses T");
  }
  validate_or_throw(inst, out);
  if (!is_strictly_monotone(inst.x, inst.y, out)) {
    throw InternalError("3-sum reversal is not monotone");
  }
  return out;
}

}  // namespace symex
