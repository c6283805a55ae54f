// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "oracles.hpp"
#include "symex/errors.hpp"
#include "symex/matroid.hpp"
#include "symex/sums.hpp"
#include "symex/union_partition.hpp"

namespace symex {
namespace {

const char* kK4 = "a 1 2\nb 2 3\nc 3 4\nd 1 3\ne 1 4\nf 2 4\n";
const char* kDT = "# doubled triangle path\na1 1 2\na2 1 2\nb1 2 3\nb2 2 3\n";

std::shared_ptr<const GraphicMatroid> graphic(const char* text) {
  return make_graphic(parse_graph_text(text));
}

ElemSet L(const Matroid& m, std::vector<std::string> labels) {
  return m.find_all(labels);
}

std::vector<std::pair<int, int>> edge_list(const Graph& g) {
  return {g.edges.begin(), g.edges.end()};
}

Graph random_graph(std::mt19937_64& rng, int nv, int ne) {
  Graph g;
  for (int v = 0; v < nv; ++v) g.add_vertex(std::to_string(v));
  for (int i = 0; i < ne; ++i) {
    g.add_edge(static_cast<int>(rng() % nv), static_cast<int>(rng() % nv));
  }
  return g;
}

std::vector<std::string> numbered(int n, const std::string& prefix = "e") {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

TEST(Rank, FixtureExamples) {
  auto k4 = graphic(kK4);
  EXPECT_EQ(k4->rank(L(*k4, {"a", "b", "c"})), 3);
  EXPECT_TRUE(k4->is_basis(L(*k4, {"a", "b", "c"})));
  EXPECT_FALSE(k4->is_basis(L(*k4, {"a", "b", "d"})));
  auto dt = graphic(kDT);
  EXPECT_EQ(dt->rank(L(*dt, {"a1", "a2"})), 1);
  EXPECT_THROW(k4->rank({7}), DomainError);
  EXPECT_THROW(k4->find("zz"), DomainError);
}

TEST(Rank, EmptySetIsBasisOnlyForRankZero) {
  auto k4 = graphic(kK4);
  EXPECT_FALSE(k4->is_basis({}));
  auto loops = graphic("x 1 1\ny 1 1\n");
  EXPECT_TRUE(loops->is_basis({}));
}

TEST(FundamentalCircuit, FixtureExamples) {
  auto k4 = graphic(kK4);
  ElemSet b = L(*k4, {"a", "b", "c"});
  EXPECT_EQ(k4->fundamental_circuit(b, k4->find("d")), L(*k4, {"a", "b", "d"}));
  EXPECT_EQ(k4->fundamental_circuit(b, k4->find("f")), L(*k4, {"b", "c", "f"}));
  auto dt = graphic(kDT);
  EXPECT_EQ(dt->fundamental_circuit(L(*dt, {"a1", "b1"}), dt->find("a2")),
            L(*dt, {"a1", "a2"}));
  EXPECT_THROW(k4->fundamental_circuit(b, k4->find("a")), DomainError);
  EXPECT_THROW(k4->fundamental_circuit(L(*k4, {"a", "b", "d"}), 2),
               DomainError);
}

TEST(Views, FixtureExamples) {
  auto k4 = graphic(kK4);
  EXPECT_EQ(k4->dual()->full_rank(), 3);
  auto m = k4->minor(L(*k4, {"a"}), {});
  EXPECT_EQ(m->rank(L(*m, {"b", "c"})), 2);
  auto dt = graphic(kDT);
  auto dm = dt->minor(L(*dt, {"a1"}), {});
  EXPECT_EQ(dm->rank(L(*dm, {"a2"})), 0);
  EXPECT_THROW(k4->minor({0, 1}, {1}), DomainError);
}

TEST(Views, GenericViewsMatchMaterialized) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int nv = 2 + rng() % 5;
    const int ne = 3 + rng() % 8;
    Graph g = random_graph(rng, nv, ne);
    auto gm = make_graphic(g, numbered(ne));
    auto cm = std::make_shared<CographicMatroid>(g, numbered(ne));
    auto bm = as_binary(*gm);
    auto bd = as_binary(*cm);
    auto generic_dual = std::make_shared<DualMatroid>(gm);
    auto std_form = binary_standard_form(*gm);
    const auto edges = edge_list(g);
    const oracle::Mask full = (oracle::Mask{1} << ne) - 1;
    ElemSet contract, del;
    for (int e = 0; e < ne; ++e) {
      int c = rng() % 4;
      if (c == 0) contract.push_back(e);
      if (c == 1) del.push_back(e);
    }
    auto gminor = gm->minor(contract, del);
    auto bminor = bm->minor(contract, del);
    auto vminor = std::make_shared<MinorMatroid>(gm, contract, del);
    auto cminor = cm->minor(del, contract);  // dual of gminor
    for (oracle::Mask s = 0; s <= full; ++s) {
      ElemSet set = from_mask(s);
      const int expect = oracle::graph_rank(nv, edges, s);
      ASSERT_EQ(gm->rank(set), expect);
      ASSERT_EQ(bm->rank(set), expect);
      ASSERT_EQ(std_form->rank(set), expect);
      const int dual_expect = std::popcount(s) -
                              oracle::graph_rank(nv, edges, 0) -
                              oracle::graph_rank(nv, edges, full) +
                              oracle::graph_rank(nv, edges, full & ~s);
      ASSERT_EQ(cm->rank(set), dual_expect);
      ASSERT_EQ(bd->rank(set), dual_expect);
      ASSERT_EQ(generic_dual->rank(set), dual_expect);
      ASSERT_EQ(generic_dual->dual()->rank(set), expect);
      ASSERT_EQ(gm->dual()->dual()->rank(set), expect);
    }
    const int nm = gminor->size();
    ASSERT_EQ(bminor->size(), nm);
    for (oracle::Mask s = 0; s < (oracle::Mask{1} << nm); ++s) {
      ElemSet set = from_mask(s);
      ASSERT_EQ(gminor->rank(set), vminor->rank(set));
      ASSERT_EQ(bminor->rank(set), vminor->rank(set));
      ASSERT_EQ(cminor->rank(set), gminor->dual()->rank(set));
    }
    ASSERT_EQ(gminor->labels(), vminor->labels());
  }
}

TEST(Rank, AxiomsOnAllSubsets) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const int rows = 2 + rng() % 4;
    const int n = 4 + rng() % 6;
    std::vector<BitVec> cols(n, BitVec(rows));
    for (auto& c : cols) {
      for (int r = 0; r < rows; ++r) c[r] = rng() & 1u;
    }
    BinaryMatroid m(cols, rows, numbered(n));
    const oracle::Mask full = (oracle::Mask{1} << n) - 1;
    std::vector<int> r(full + 1);
    for (oracle::Mask s = 0; s <= full; ++s) r[s] = m.rank(from_mask(s));
    ASSERT_EQ(r[0], 0);
    for (oracle::Mask s = 0; s <= full; ++s) {
      ASSERT_LE(r[s], std::popcount(s));
      for (int e = 0; e < n; ++e) {
        oracle::Mask t = s | oracle::Mask{1} << e;
        ASSERT_LE(r[s], r[t]);
        ASSERT_LE(r[t], r[s] + 1);
      }
      for (int e = 0; e < n; ++e) {
        for (int f = e + 1; f < n; ++f) {
          oracle::Mask a = s | oracle::Mask{1} << e;
          oracle::Mask b = s | oracle::Mask{1} << f;
          ASSERT_LE(r[a | b] + r[s], r[a] + r[b]);  // local submodularity
        }
      }
    }
  }
}

TEST(FundamentalCircuit, RemovingAnyCircuitElementGivesBasis) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5 + rng() % 6;
    Graph g = random_graph(rng, 2 + rng() % 4, n);
    auto m = make_graphic(g, numbered(n));
    auto std_form = binary_standard_form(*m);
    const auto edges = edge_list(g);
    const int nv = g.num_vertices;
    auto rank = [&](oracle::Mask s) {
      return oracle::graph_rank(nv, edges, s);
    };
    for (oracle::Mask b : oracle::bases(n, rank)) {
      ElemSet basis = from_mask(b);
      for (Elem e = 0; e < n; ++e) {
        if (contains(basis, e)) continue;
        ElemSet c = m->fundamental_circuit(basis, e);
        ASSERT_EQ(c, std_form->fundamental_circuit(basis, e));
        for (Elem x = 0; x < n; ++x) {
          ElemSet swapped = with(without(basis, x), e);
          ASSERT_EQ(m->is_basis(swapped), contains(basis, x) && contains(c, x));
        }
      }
    }
  }
}

MatroidPtr k_sum_example(int arity) {
  auto k4a = make_graphic(
      parse_graph_text("a 1 2\nb 2 3\nc 3 4\nd 1 3\ne 1 4\nf 2 4\n"));
  auto k4b = make_graphic(
      parse_graph_text("a 1 2\nB 2 3\nC 3 4\nD 1 3\nE 1 4\nF 2 4\n"));
  if (arity == 1) {
    auto k4c = make_graphic(
        parse_graph_text("A 1 2\nB 2 3\nC 3 4\nD 1 3\nE 1 4\nF 2 4\n"));
    return compose_sum(k4a, k4c, {1, {}});
  }
  if (arity == 2) return compose_sum(k4a, k4b, {2, {"a"}});
  return nullptr;
}

TEST(ComposeSum, RankExamples) {
  auto k3a = make_graphic(parse_graph_text("a 1 2\nb 2 3\nc 1 3\n"));
  auto k3b = make_graphic(parse_graph_text("x 1 2\ny 2 3\nz 1 3\n"));
  auto s1 = compose_sum(k3a, k3b, {1, {}});
  EXPECT_EQ(s1->size(), 6);
  EXPECT_EQ(s1->full_rank(), 4);
  EXPECT_EQ(k_sum_example(2)->full_rank(), 5);
  // Wheel W4 and K2,2,2 share the triangle {s,t,u}.
  auto w4 = make_graphic(parse_graph_text(
      "s 1 2\nt 2 3\nu 1 3\nh1 0 1\nh2 0 2\nh3 0 3\nr1 3 4\nh4 0 4\nr2 4 1\n"));
  auto oct = make_graphic(parse_graph_text(
      "s 1 2\nt 2 3\nu 1 3\np1 1 5\np2 2 5\np3 1 6\nq1 3 6\nq2 3 4\nq3 2 4\n"
      "o1 4 5\no2 5 6\no3 6 4\n"));
  auto s3 = compose_sum(w4, oct, {3, {"s", "t", "u"}});
  EXPECT_EQ(s3->full_rank(), w4->full_rank() + oct->full_rank() - 2);
}

TEST(ComposeSum, RejectsViolatedClauses) {
  auto k4 = graphic(kK4);
  auto k4b = make_graphic(
      parse_graph_text("a 1 2\nB 2 3\nC 3 4\nd 1 3\nE 1 4\nF 2 4\n"));
  auto k4c = make_graphic(
      parse_graph_text("a 1 2\nb 2 3\nC 3 4\nd 1 3\nE 1 4\nF 2 4\n"));
  try {
    compose_sum(k4, k4c, {3, {"a", "b", "C"}});
    FAIL();
  } catch (const CompositionError& err) {
    EXPECT_NE(std::string(err.what()).find("missing"), std::string::npos);
  }
  // {a, b, c} is a path, not a triangle.
  auto k4d =
      make_graphic(parse_graph_text("a 1 2\nb 2 3\nc 3 4\nD 1 3\nE 1 4\nF 2 "
                                    "4\nG 1 4\nH 2 4\nI 1 3\nJ 1 2\nK 3 4\n"));
  try {
    compose_sum(graphic("a 1 2\nb 2 3\nc 3 4\nd 1 3\ne 1 4\nf 2 4\ng 1 4\n"),
                k4d, {3, {"a", "b", "c"}});
    FAIL();
  } catch (const CompositionError& err) {
    EXPECT_NE(std::string(err.what()).find("triangle"), std::string::npos)
        << err.what();
  }
  // A K3 triangle is not coindependent.
  auto k3 = make_graphic(parse_graph_text("a 1 2\nb 2 3\nd 1 3\n"));
  EXPECT_THROW(compose_sum(k4, k3, {3, {"a", "b", "d"}}), CompositionError);
  // Coloop at the shared element.
  auto pendant = make_graphic(parse_graph_text("a 1 2\nx 2 3\ny 2 3\nz 3 4\n"));
  EXPECT_THROW(compose_sum(k4b, pendant, {2, {"a"}}), CompositionError);
  EXPECT_THROW(compose_sum(k4, k4b, {2, {}}), CompositionError);
}

std::vector<oracle::Mask> columns_of(const BinaryMatroid& b) {
  std::vector<oracle::Mask> out;
  for (const auto& c : b.columns()) {
    oracle::Mask m = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i]) m |= oracle::Mask{1} << i;
    }
    out.push_back(m);
  }
  return out;
}

void check_sum_against_oracle(const MatroidPtr& m1, const MatroidPtr& m2,
                              const SumSpec& spec) {
  auto sum = compose_sum(m1, m2, spec);
  auto rep = compose_binary(*m1, *m2, spec);
  auto b1 = as_binary(*m1);
  auto b2 = as_binary(*m2);
  std::vector<int> sh1, sh2;
  for (const auto& l : spec.shared) {
    sh1.push_back(m1->find(l));
    sh2.push_back(m2->find(l));
  }
  auto rank =
      oracle::binary_sum_rank(columns_of(*b1), sh1, columns_of(*b2), sh2);
  const int n = sum->size();
  ASSERT_EQ(rep->size(), n);
  ASSERT_EQ(rep->labels(), sum->labels());
  const int r = rank((oracle::Mask{1} << n) - 1);
  ASSERT_EQ(sum->full_rank(), r);
  for (oracle::Mask s = 0; s < (oracle::Mask{1} << n); ++s) {
    ElemSet set = from_mask(s);
    const int expect = rank(s);
    ASSERT_EQ(sum->rank(set), expect) << s;
    ASSERT_EQ(rep->rank(set), expect) << s;
    ASSERT_EQ(sum->formula_rank(set), expect) << s;
    ASSERT_EQ(sum->is_basis(set), std::popcount(s) == r && expect == r) << s;
  }
}

TEST(ComposeSum, AgreesWithCycleDefinition) {
  check_sum_against_oracle(graphic("a 1 2\nb 2 3\nc 1 3\n"),
                           graphic("x 1 2\ny 2 3\nz 1 3\n"), {1, {}});
  check_sum_against_oracle(
      graphic(kK4), graphic("a 1 2\nB 2 3\nC 3 4\nD 1 3\nE 1 4\n"), {2, {"a"}});
  check_sum_against_oracle(graphic("t 1 2\nx 1 2\ny 1 2\n"),
                           graphic("t 1 2\nu 2 3\nv 3 1\nw 1 3\n"), {2, {"t"}});
  auto w4 = graphic(
      "s 1 2\nt 2 3\nu 1 3\nh1 0 1\nh2 0 2\nh3 0 3\nr1 3 4\nh4 0 4\nr2 4 1\n");
  auto k4 = graphic("s 1 2\nt 2 3\nu 1 3\ng1 0 1\ng2 0 2\ng3 0 3\ng4 0 1\n");
  check_sum_against_oracle(w4, k4, {3, {"s", "t", "u"}});
  // Cographic part: M*(K3,3) has triangles at vertex stars.
  auto k33 = std::make_shared<CographicMatroid>(
      parse_graph_text("s 0 3\nt 0 4\nu 0 5\nm1 1 3\nm2 1 4\nm3 1 5\n"
                       "m4 2 3\nm5 2 4\nm6 2 5\n")
          .graph,
      std::vector<std::string>{"s", "t", "u", "m1", "m2", "m3", "m4", "m5",
                               "m6"});
  check_sum_against_oracle(k33, w4, {3, {"s", "t", "u"}});
}

TEST(UnionPartition, Examples) {
  auto k4 = graphic(kK4);
  auto p = matroid_union_partition(*k4, *k4, k4->ground());
  ASSERT_TRUE(p.feasible);
  EXPECT_TRUE(k4->is_basis(p.first));
  EXPECT_TRUE(k4->is_basis(p.second));
  auto k3 = graphic("a 1 2\nb 2 3\nc 1 3\n");
  auto q = matroid_union_partition(*k3, *k3, k3->ground());
  ASSERT_TRUE(q.feasible);
  EXPECT_EQ(q.first.size() + q.second.size(), 3u);
  EXPECT_TRUE(k3->is_independent(q.first));
  EXPECT_TRUE(k3->is_independent(q.second));
  auto tri = graphic("a 1 2\nb 1 2\nc 1 2\n");
  auto w = matroid_union_partition(*tri, *tri, tri->ground());
  ASSERT_FALSE(w.feasible);
  EXPECT_LT(tri->rank(w.witness) * 2, static_cast<int>(w.witness.size()));
}

TEST(UnionPartition, AgreesWithRankFormula) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + rng() % 6;
    Graph g = random_graph(rng, 2 + rng() % 4, n);
    auto m = make_graphic(g, numbered(n));
    MatroidPtr d = trial % 2 ? m->dual() : MatroidPtr(m);
    auto p = matroid_union_partition(*m, *d, m->ground());
    // Brute force: feasible iff r1(Z) + r2(Z) >= |Z| for all Z.
    bool feasible = true;
    for (oracle::Mask s = 1; s < (oracle::Mask{1} << n); ++s) {
      ElemSet z = from_mask(s);
      if (m->rank(z) + d->rank(z) < static_cast<int>(z.size()))
        feasible = false;
    }
    ASSERT_EQ(p.feasible, feasible);
    if (p.feasible) {
      ASSERT_TRUE(m->is_independent(p.first));
      ASSERT_TRUE(d->is_independent(p.second));
      ASSERT_EQ(set_union(p.first, p.second), m->ground());
      ASSERT_TRUE(disjoint(p.first, p.second));
    } else {
      ASSERT_LT(m->rank(p.witness) + d->rank(p.witness),
                static_cast<int>(p.witness.size()));
    }
  }
}

}  // namespace
}  // namespace symex
