// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Thresholds are exact; timings are wall clock.

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "symex/errors.hpp"
#include "symex/generate.hpp"
#include "symex/pipeline.hpp"
#include "symex/reductions.hpp"
#include "symex/special.hpp"
#include "symex/sum_composition.hpp"
#include "symex/tree_gen.hpp"
#include "symex/union_partition.hpp"

namespace symex {
namespace {

using oracle::Mask;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

oracle::RankFn rank_of(const Matroid& m) {
  return [&m](Mask s) { return m.rank(from_mask(s)); };
}

// Collects the first few failure messages of a criterion.
struct Check {
  int failures = 0;
  std::vector<std::string> notes;

  void fail(const std::string& what) {
    if (++failures <= 3) notes.push_back(what);
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  bool ok() const { return failures == 0; }
};

int g_failed = 0;

void report(int id, const std::string& name, const Check& c,
            const std::string& summary) {
  std::cout << "criterion " << id << " [" << name << "] "
            << (c.ok() ? "PASS" : "FAIL") << ": " << summary;
  if (!c.ok()) {
    std::cout << " (" << c.failures << " failures";
    for (const auto& n : c.notes) std::cout << "; " << n;
    std::cout << ")";
    ++g_failed;
  }
  std::cout << std::endl;
}

BasisPair disjoint_pair(const Matroid& m) {
  UnionPartition u = two_basis_partition(m);
  if (!u.feasible) throw InternalError("no two disjoint bases");
  return {u.first, u.second};
}

std::string describe(const std::string& tag, int i, int n) {
  return tag + " #" + std::to_string(i) + " n=" + std::to_string(n);
}

// ---- 1 and 2 ------------------------------------------------------------

struct GraphicCase {
  LabeledGraph lg;
  std::shared_ptr<const GraphicMatroid> m;
  BasisPair x;
};

std::vector<GraphicCase> graphic_family() {
  Rng rng(20260101);
  std::vector<GraphicCase> out;
  for (int i = 0; i < 200; ++i) {
    const int n = 4 + uniform(rng, 37);
    GraphicCase c;
    c.lg = random_bispanning(n, rng);
    c.m = make_graphic(c.lg);
    c.x = disjoint_pair(*c.m);
    out.push_back(std::move(c));
  }
  return out;
}

void criterion1(const std::vector<GraphicCase>& family) {
  Check c;
  Rng rng(11);
  const auto t0 = Clock::now();
  long long worst_len = 0, worst_w = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const GraphicCase& g = family[i];
    const int n = g.lg.graph.num_vertices;
    ElemSet forb = random_forbidden(g.lg.graph, g.x, rng);
    std::vector<int> fv = g.lg.graph.vertices_of(forb);
    c.expect(fv.size() <= 3, describe("F spans > 3 vertices", i, n));
    BasisPair y = random_walk(*g.m, g.x, 3 * n, forb, rng);
    Instance inst{g.m, g.x, y, forb, std::nullopt};
    try {
      SolveReport r = solve_white(inst);
      const BasisPair end = apply_and_validate(*g.m, g.x, r.sequence, forb);
      c.expect(end == y, describe("wrong endpoint", i, n));
      c.expect(!touches(r.sequence, forb), describe("touches F", i, n));
      const long long len = static_cast<long long>(r.sequence.size());
      const int w = sequence_width(r.sequence);
      c.expect(len <= 1LL * (n - 1) * (n - 1), describe("length", i, n));
      c.expect(w <= 2 * (n - 2), describe("width", i, n));
      worst_len = std::max(worst_len, len);
      worst_w = std::max<long long>(worst_w, w);
    } catch (const std::exception& e) {
      c.fail(describe(std::string("threw ") + e.what(), i, n));
    }
  }
  const double secs = seconds_since(t0);
  c.expect(secs < 60.0, "runtime " + std::to_string(secs) + " s");
  std::ostringstream os;
  os << family.size() << " instances, length <= (n-1)^2, width <= 2(n-2); "
     << "max length " << worst_len << ", max width " << worst_w << ", " << secs
     << " s (limit 60 s)";
  report(1, "graphic white bound", c, os.str());
}

void criterion2(const std::vector<GraphicCase>& family) {
  Check c;
  Rng rng(12);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const GraphicCase& g = family[i];
    const int n = g.lg.graph.num_vertices;
    const Elem h = uniform(rng, g.m->size());
    try {
      SolveReport r = solve_gabow(g.m, g.x, h);
      const ExchangeSequence& s = r.sequence;
      c.expect(static_cast<int>(s.size()) == n - 1, describe("length", i, n));
      c.expect(is_strictly_monotone(g.x, swapped(g.x), s),
               describe("not monotone", i, n));
      c.expect(!s.empty() && (s.back().e == h || s.back().f == h),
               describe("last step misses h", i, n));
      c.expect(apply_and_validate(*g.m, g.x, s) == swapped(g.x),
               describe("wrong endpoint", i, n));
    } catch (const std::exception& e) {
      c.fail(describe(std::string("threw ") + e.what(), i, n));
    }
  }
  report(2, "graphic gabow", c,
         std::to_string(family.size()) +
             " reversals, length exactly n-1, strictly monotone, last step "
             "uses h");
}

// ---- 3 ------------------------------------------------------------------

void criterion3() {
  Check c;
  Fixture k4 = fixture("k4");
  BfsOptions blocked;
  blocked.forbidden = k4.m->find_all({"b", "e"});
  BfsResult r1 = bfs_oracle(*k4.m, k4.x, k4.y, blocked);
  c.expect(!r1.reachable, "F = {b, e} reachable");
  BfsResult r2 = bfs_oracle(*k4.m, k4.x, k4.y);
  c.expect(r2.reachable && r2.distance == 1,
           "F = {} distance " + std::to_string(r2.distance));
  // Independent check on the same two questions.
  // a..f = 12, 23, 34, 13, 14, 24 with vertices shifted to 0..3.
  const std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3},
                                               {0, 2}, {0, 3}, {1, 3}};
  auto rank = [&](Mask s) { return oracle::graph_rank(4, edges, s); };
  auto mask = [](const ElemSet& s) {
    Mask m = 0;
    for (Elem e : s) m |= Mask{1} << e;
    return m;
  };
  const auto from = std::make_pair(mask(k4.x.first), mask(k4.x.second));
  const auto to = std::make_pair(mask(k4.y.first), mask(k4.y.second));
  c.expect(oracle::exchange_distance(6, rank, from, to, mask(blocked.forbidden),
                                     false) < 0,
           "oracle finds a path with F = {b, e}");
  c.expect(oracle::exchange_distance(6, rank, from, to, 0, false) == 1,
           "oracle distance with F = {} is not 1");
  report(3, "K4 exchange graph", c,
         std::string("F = {b, e}: ") +
             (r1.reachable ? "reachable" : "unreachable") +
             ", F = {}: distance " + std::to_string(r2.distance));
}

// ---- 4 ------------------------------------------------------------------

void criterion4() {
  Check c;
  const auto t0 = Clock::now();
  Fixture f = fixture("r10");
  const int n = f.m->size();
  // Every basis whose complement is a basis gives a compatible disjoint pair.
  int expected = 0;
  for (Mask b : oracle::bases(n, rank_of(*f.m))) {
    const Mask rest = ((Mask{1} << n) - 1) & ~b;
    expected += f.m->rank(from_mask(rest)) == f.m->full_rank();
  }
  auto dist = bfs_distances(*f.m, f.x);
  int far = 0;
  for (const auto& [state, d] : dist) far = std::max(far, d);
  c.expect(static_cast<int>(dist.size()) == expected,
           "reached " + std::to_string(dist.size()) + " of " +
               std::to_string(expected));
  c.expect(far <= 5, "eccentricity " + std::to_string(far));
  BfsOptions mono;
  mono.monotone = true;
  BfsResult rev = bfs_oracle(*f.m, f.x, swapped(f.x), mono);
  c.expect(rev.reachable && rev.distance == 5,
           "monotone reversal distance " + std::to_string(rev.distance));
  SolveReport g = solve_gabow(f.m, f.x);
  c.expect(g.length == 5, "solver reversal length " + std::to_string(g.length));
  const double secs = seconds_since(t0);
  c.expect(secs < 30.0, "runtime " + std::to_string(secs) + " s");
  std::ostringstream os;
  os << dist.size() << " disjoint pairs, farthest at " << far
     << " (limit 5), monotone reversal " << rev.distance << " (exactly 5), "
     << secs << " s (limit 30 s)";
  report(4, "R10 sweep", c, os.str());
}

// ---- 5 ------------------------------------------------------------------

void criterion5() {
  Check c;
  const auto t0 = Clock::now();
  Fixture f = fixture("f7");
  const int n = f.m->size();
  std::vector<ElemSet> bases;
  for (Mask b : oracle::bases(n, rank_of(*f.m))) bases.push_back(from_mask(b));
  std::vector<BasisPair> pairs;
  for (const auto& a : bases) {
    for (const auto& b : bases) pairs.push_back({a, b});
  }
  long long solved = 0;
  int worst_len = 0, worst_w = 0;
  for (const auto& x : pairs) {
    for (const auto& y : pairs) {
      if (!compatible(x, y)) continue;
      Instance inst{f.m, x, y, {}, std::nullopt};
      try {
        SolveReport r = solve_white(inst);
        c.expect(apply_and_validate(*f.m, x, r.sequence) == y,
                 "wrong endpoint");
        c.expect(r.length <= 9, "length " + std::to_string(r.length));
        c.expect(r.width <= 4, "width " + std::to_string(r.width));
        worst_len = std::max(worst_len, r.length);
        worst_w = std::max(worst_w, r.width);
        ++solved;
      } catch (const std::exception& e) {
        c.fail(std::string("threw ") + e.what());
      }
    }
  }
  int disjoint = 0;
  for (const auto& x : pairs) {
    if (!set_intersection(x.first, x.second).empty()) continue;
    ++disjoint;
    SolveReport g = solve_gabow(f.m, x);
    c.expect(g.length == 3 && is_strictly_monotone(x, swapped(x), g.sequence),
             "reversal length " + std::to_string(g.length));
    BfsOptions mono;
    mono.monotone = true;
    BfsResult b = bfs_oracle(*f.m, x, swapped(x), mono);
    c.expect(b.reachable && b.distance == 3,
             "monotone search distance " + std::to_string(b.distance));
  }
  const double secs = seconds_since(t0);
  c.expect(secs < 10.0, "runtime " + std::to_string(secs) + " s");
  std::ostringstream os;
  os << solved << " compatible (x, y) instances, max length " << worst_len
     << " (limit 9), max width " << worst_w << " (limit 4); " << disjoint
     << " disjoint pairs reverse in exactly 3; " << secs << " s (limit 10 s)";
  report(5, "F7 sweep", c, os.str());
}

// ---- 6 ------------------------------------------------------------------

std::vector<ComposedInstance> composed_family() {
  std::vector<ComposedInstance> out;
  for (const auto& [name, tree] : small_trees()) {
    if (auto ci = make_composed_instance(name, tree)) out.push_back(*ci);
  }
  if (auto ci = make_composed_instance("k34 gadget tree", k34_gadget_tree())) {
    out.push_back(*ci);
  }
  Rng rng(606);
  for (int made = 0, i = 0; made < 24 && i < 200; ++i) {
    auto ci = make_composed_instance("two-sum star",
                                     random_two_sum_star(1 + i % 3, rng));
    if (ci) {
      out.push_back(*ci);
      ++made;
    }
  }
  for (int made = 0, i = 0; made < 20 && i < 200; ++i) {
    auto ci = make_composed_instance("three-sum star",
                                     random_three_sum_star(1 + i % 2, rng));
    if (ci) {
      out.push_back(*ci);
      ++made;
    }
  }
  return out;
}

bool has_tag(const DecompositionTree& t, const std::string& tag) {
  return std::any_of(t.nodes.begin(), t.nodes.end(),
                     [&](const TreeNode& n) { return n.tag == tag; });
}

void criterion6(const std::vector<ComposedInstance>& family) {
  Check c;
  Rng rng(66);
  int small = 0, threes = 0, r10s = 0, f7s = 0;
  bool gadget = false;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const ComposedInstance& ci = family[i];
    const int r = ci.m->full_rank();
    const std::string tag = ci.name + " #" + std::to_string(i);
    gadget |= ci.name == "k34 gadget tree" && ci.m->size() == 68;
    threes += std::any_of(ci.tree.sums.begin(), ci.tree.sums.end(),
                          [](const TreeSum& s) { return s.arity == 3; });
    r10s += has_tag(ci.tree, "r10");
    f7s += has_tag(ci.tree, "f7");
    BasisPair y = random_walk(*ci.m, ci.x, 3 * r, {}, rng);
    Instance inst{ci.m, ci.x, y, {}, std::nullopt};
    try {
      SolveReport rep = solve_white(inst);
      c.expect(apply_and_validate(*ci.m, ci.x, rep.sequence) == y,
               tag + " wrong endpoint");
      c.expect(rep.length <= 2LL * r * r, tag + " length");
      c.expect(rep.width <= std::max(1, 4 * (r - 1)), tag + " width");
      if (ci.m->size() <= 16) {
        ++small;
        BfsResult b = bfs_oracle(*ci.m, ci.x, y);
        c.expect(b.reachable && b.distance <= rep.length, tag + " above BFS");
      }
    } catch (const std::exception& e) {
      c.fail(tag + " threw " + e.what());
    }
  }
  c.expect(family.size() >= 50, "only " + std::to_string(family.size()));
  c.expect(gadget, "gadget tree missing");
  c.expect(threes > 0 && r10s > 0 && f7s > 0, "family lacks a leaf kind");
  std::ostringstream os;
  os << family.size() << " composed instances (" << threes << " with 3-sums, "
     << r10s << " with R10, " << f7s << " with F7, gadget tree "
     << (gadget ? "included" : "missing") << "), length <= 2r^2, width <= "
     << "4(r-1); " << small << " checked against BFS";
  report(6, "regular composition", c, os.str());
}

// ---- 7 ------------------------------------------------------------------

void criterion7(const std::vector<GraphicCase>& graphic,
                const std::vector<ComposedInstance>& composed) {
  Check c;
  int compared = 0, tight_found = 0, checked_large = 0;
  auto examine = [&](const Matroid& m, const BasisPair& x,
                     const std::string& tag) {
    std::optional<ElemSet> z;
    try {
      z = find_nontrivial_tight_set(m, x);
    } catch (const std::exception& e) {
      c.fail(tag + " threw " + e.what());
      return;
    }
    if (z) {
      ++tight_found;
      c.expect(!z->empty() && static_cast<int>(z->size()) < m.size() &&
                   2 * m.rank(*z) == static_cast<int>(z->size()),
               tag + " returned a set that is not tight");
    }
    if (m.size() <= 16) {
      ++compared;
      const int excess = oracle::min_tight_excess(m.size(), rank_of(m)).first;
      c.expect(z.has_value() == (excess == 0), tag + " disagrees on existence");
    } else {
      ++checked_large;
    }
  };
  for (std::size_t i = 0; i < graphic.size(); ++i) {
    examine(*graphic[i].m, graphic[i].x, "graphic #" + std::to_string(i));
  }
  for (std::size_t i = 0; i < composed.size(); ++i) {
    examine(*composed[i].m, composed[i].x, composed[i].name);
  }
  Rng rng(77);
  for (int i = 0; i < 150; ++i) {
    const int r = 2 + uniform(rng, 7);
    std::vector<BitVec> cols;
    std::vector<std::string> labels;
    for (int k = 0; k < 2 * r; ++k) {
      cols.emplace_back(r, rng() % (Mask{1} << r));
      labels.push_back("c" + std::to_string(k));
    }
    auto m = std::make_shared<BinaryMatroid>(cols, r, labels);
    UnionPartition u = two_basis_partition(*m);
    if (!u.feasible) continue;
    examine(*m, {u.first, u.second}, "gf2 #" + std::to_string(i));
  }
  for (int i = 0; i < 60; ++i) {
    auto m = make_graphic(random_bispanning(3 + uniform(rng, 7), rng));
    examine(*m, disjoint_pair(*m), "small graphic #" + std::to_string(i));
  }
  for (const char* name : {"k4", "dt", "r10"}) {
    Fixture f = fixture(name);
    examine(*f.m, f.x, name);
  }
  std::ostringstream os;
  os << compared << " instances with |E| <= 16 compared with brute force, "
     << checked_large << " larger ones checked for tightness only; "
     << tight_found << " nontrivial tight sets found";
  report(7, "tight-set oracle", c, os.str());
}

// ---- 8 ------------------------------------------------------------------

// Brute force over vertex subsets: |(E - T)[U]| <= 2|U| - 3 for |U| >= 2.
bool sparse_outside(const Graph& g, const ElemSet& t) {
  const int n = g.num_vertices;
  for (Mask u = 0; u < (Mask{1} << n); ++u) {
    const int k = std::popcount(u);
    if (k < 2) continue;
    int inside = 0;
    for (Elem e = 0; e < g.num_edges(); ++e) {
      if (std::find(t.begin(), t.end(), e) != t.end()) continue;
      auto [a, b] = g.edges[e];
      inside += (u >> a & 1) && (u >> b & 1);
    }
    if (inside > 2 * k - 3) return false;
  }
  return true;
}

void criterion8() {
  Check c;
  Rng rng(88);
  int graphs = 0, draws = 0, orders = 0;
  while (graphs < 100 && draws < 5000) {
    ++draws;
    const int n = 6 + uniform(rng, 7);
    Graph g = random_four_regular(n, rng);
    // Pick the first triangle passing the brute-force hypothesis check.
    std::optional<ElemSet> tri;
    const int m = g.num_edges();
    for (Elem a = 0; a < m && !tri; ++a) {
      for (Elem b = a + 1; b < m && !tri; ++b) {
        for (Elem d = b + 1; d < m && !tri; ++d) {
          ElemSet t{a, b, d};
          if (g.vertices_of(t).size() != 3) continue;
          const bool ok = sparse_outside(g, t);
          c.expect(ok == !sparsity_violation(g, t).has_value(),
                   "sparsity test disagrees with brute force");
          if (ok) tri = t;
        }
      }
    }
    if (!tri) continue;
    ++graphs;
    std::vector<std::pair<int, int>> edges = g.edges;
    auto tree = [&](Mask s) {
      return std::popcount(s) == n - 1 &&
             oracle::graph_rank(n, edges, s) == n - 1;
    };
    std::array<Elem, 3> t{(*tri)[0], (*tri)[1], (*tri)[2]};
    std::sort(t.begin(), t.end());
    do {
      ++orders;
      RegularPartition p;
      try {
        p = regular_triangle_partition(g, t);
      } catch (const std::exception& e) {
        c.fail(std::string("threw ") + e.what());
        continue;
      }
      Mask f1 = 0, f2 = 0;
      for (Elem e : p.f1) f1 |= Mask{1} << e;
      for (Elem e : p.f2) f2 |= Mask{1} << e;
      const Mask t2 = Mask{1} << t[1], t3 = Mask{1} << t[2];
      const Mask e = Mask{1} << p.e;
      const Mask rest = ((Mask{1} << m) - 1) & ~(Mask{1} << t[0]) & ~t2 & ~t3;
      c.expect(!(f1 & f2) && (f1 | f2) == rest, "not a partition of E - T");
      c.expect((f1 & e) != 0, "e not in F1");
      c.expect(tree(f1), "F1");
      c.expect(tree(f2 | t2), "F2 + t2");
      c.expect(tree(f2 | t3), "F2 + t3");
      c.expect(tree((f1 & ~e) | t2), "F1 - e + t2");
      c.expect(tree((f1 & ~e) | t3), "F1 - e + t3");
      c.expect(tree(f2 | e), "F2 + e");
    } while (std::next_permutation(t.begin(), t.end()));
  }
  c.expect(graphs == 100, "only " + std::to_string(graphs) + " graphs");
  std::ostringstream os;
  os << graphs << " simple 4-regular graphs (" << draws << " drawn), " << orders
     << " triangle orderings, six spanning-tree assertions each";
  report(8, "4-regular triangle partition", c, os.str());
}

// ---- 9 ------------------------------------------------------------------

void binary_lemmas(const Matroid& m, const std::string& tag, Check& c,
                   long long& pairs, long long& triangles) {
  const int n = m.size();
  auto rank = rank_of(m);
  const auto circ = oracle::circuits(n, rank);
  const auto cocirc = oracle::cocircuits(n, rank);
  for (Mask x : circ) {
    for (Mask y : cocirc) {
      ++pairs;
      c.expect(std::popcount(x & y) != 1,
               tag + ": circuit meets cocircuit once");
    }
  }
  const int r = m.full_rank();
  for (Mask t : circ) {
    if (std::popcount(t) != 3) continue;
    ++triangles;
    const Mask rest = ((Mask{1} << n) - 1) & ~t;
    for (Mask f = rest;; f = (f - 1) & rest) {
      int count = 0;
      for (Mask ti = t; ti; ti &= ti - 1) {
        ElemSet s = from_mask(f | (ti & -ti));
        count += static_cast<int>(s.size()) == r && m.is_basis(s);
      }
      c.expect(count == 0 || count == 2,
               tag + ": triangle count " + std::to_string(count));
      if (f == 0) break;
    }
  }
}

void criterion9() {
  Check c;
  std::vector<std::pair<std::string, MatroidPtr>> ms;
  Fixture k4 = fixture("k4");
  ms.push_back({"graphic K4", k4.m});
  ms.push_back({"dual K4", k4.m->dual()});
  ms.push_back({"r10 matrix", r10_construct()});
  ms.push_back({"r10 even cycle", r10_even_cycle()});
  ms.push_back({"f7 bases", f7_construct()});
  ms.push_back({"f7 matrix", f7_matrix()});
  ms.push_back({"f7 dual", f7_construct()->dual()});
  auto a = make_graphic(
      parse_graph_text("t 1 2\na2 2 3\na3 3 4\na4 1 3\na5 1 4\na6 2 4\n"));
  auto b = make_graphic(
      parse_graph_text("b1 1 2\nb2 2 3\nt 3 4\nb4 1 3\nb5 1 4\nb6 2 4\n"));
  auto two = compose_sum(a, b, {2, {"t"}});
  ms.push_back({"2-sum of K4s", two});
  ms.push_back({"2-sum minor",
                two->minor(two->find_all({"a2"}), two->find_all({"b5"}))});
  ms.push_back({"1-sum", compose_sum(fixture("dt").m, k4.m, {1, {}})});
  Rng rng(99);
  for (int i = 0; i < 12; ++i) {
    Graph g;
    const int nv = 3 + uniform(rng, 4);
    for (int v = 0; v < nv; ++v) g.add_vertex("v" + std::to_string(v));
    const int ne = 5 + uniform(rng, 6);
    for (int e = 0; e < ne; ++e) g.add_edge(uniform(rng, nv), uniform(rng, nv));
    std::vector<std::string> labels;
    for (int e = 0; e < ne; ++e) labels.push_back("e" + std::to_string(e));
    ms.push_back({"graphic #" + std::to_string(i),
                  std::make_shared<GraphicMatroid>(g, labels)});
    ms.push_back({"cographic #" + std::to_string(i),
                  std::make_shared<CographicMatroid>(g, labels)});
  }
  for (int i = 0; i < 12; ++i) {
    const int rows = 2 + uniform(rng, 4);
    const int n = 5 + uniform(rng, 6);
    std::vector<BitVec> cols;
    std::vector<std::string> labels;
    for (int k = 0; k < n; ++k) {
      cols.emplace_back(rows, rng() % (Mask{1} << rows));
      labels.push_back("c" + std::to_string(k));
    }
    auto m = std::make_shared<BinaryMatroid>(cols, rows, labels);
    ms.push_back({"gf2 #" + std::to_string(i), m});
    ms.push_back({"gf2 dual #" + std::to_string(i), m->dual()});
  }
  long long pairs = 0, triangles = 0;
  for (const auto& [tag, m] : ms) {
    if (m->size() > 10) {
      c.fail(tag + " has more than 10 elements");
      continue;
    }
    binary_lemmas(*m, tag, c, pairs, triangles);
  }
  std::ostringstream os;
  os << ms.size() << " matroids with |E| <= 10 across graphic, cographic, "
     << "GF(2), even-cycle, basis-list and sum backends; " << pairs
     << " circuit/cocircuit pairs, " << triangles << " triangles";
  report(9, "binary matroid lemmas", c, os.str());
}

}  // namespace
}  // namespace symex

int main() {
  using namespace symex;
  const auto t0 = Clock::now();
  const auto graphic = graphic_family();
  criterion1(graphic);
  criterion2(graphic);
  criterion3();
  criterion4();
  criterion5();
  const auto composed = composed_family();
  criterion6(composed);
  criterion7(graphic, composed);
  criterion8();
  criterion9();
  std::cout << (g_failed == 0 ? "all criteria passed"
                              : std::to_string(g_failed) + " criteria failed")
            << " in " << seconds_since(t0) << " s" << std::endl;
  return g_failed == 0 ? 0 : 1;
}
