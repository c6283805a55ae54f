// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <bit>
#include <map>

#include "oracles.hpp"
#include "symex/errors.hpp"
#include "symex/generate.hpp"
#include "symex/special.hpp"

namespace symex {
namespace {

// A 5-edge subset of K5 is a basis of the even-cycle matroid iff it is
// connected and its unique cycle is odd. Checked by peeling leaves.
bool even_cycle_basis_oracle(const Graph& g, oracle::Mask s) {
  if (std::popcount(s) != 5) return false;
  if (oracle::graph_rank(g.num_vertices, g.edges, s) != 4) return false;
  oracle::Mask left = s;
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < g.num_vertices; ++v) {
      int deg = 0, last = -1;
      for (int e = 0; e < g.num_edges(); ++e) {
        if (!(left >> e & 1)) continue;
        if (g.edges[e].first == v || g.edges[e].second == v) {
          ++deg;
          last = e;
        }
      }
      if (deg == 1) {
        left &= ~(oracle::Mask{1} << last);
        changed = true;
      }
    }
  }
  return std::popcount(left) % 2 == 1;
}

TEST(R10, BackendsAgreeOnEveryRank) {
  auto m = r10_construct();
  auto ec = r10_even_cycle();
  EXPECT_EQ(m->full_rank(), 5);
  for (const auto& c : m->columns()) EXPECT_EQ(c.count(), 3u);
  for (oracle::Mask s = 0; s < 1024; ++s) {
    ElemSet set = from_mask(s);
    ASSERT_EQ(m->rank(set), ec->rank(set)) << s;
    const bool basis = std::popcount(s) == 5 && ec->rank(set) == 5;
    ASSERT_EQ(basis, even_cycle_basis_oracle(ec->graph(), s)) << s;
  }
}

TEST(R10, FixtureAndSmallCircuits) {
  Fixture f = fixture("r10");
  EXPECT_TRUE(f.m->is_basis(f.x.first));
  EXPECT_TRUE(f.m->is_basis(f.x.second));
  EXPECT_TRUE(disjoint(f.x.first, f.x.second));
  auto b = as_binary(*f.m);
  std::vector<oracle::Mask> cols;
  for (const auto& c : b->columns()) cols.push_back(c.to_ulong());
  auto rank = [&](oracle::Mask s) { return oracle::column_rank(cols, s); };
  for (auto c : oracle::circuits(10, rank)) EXPECT_GE(std::popcount(c), 4);
  for (auto c : oracle::cocircuits(10, rank)) EXPECT_GE(std::popcount(c), 4);
  for (int a = 0; a < 10; ++a) {
    for (int c = a + 1; c < 10; ++c) {
      for (int d = c + 1; d < 10; ++d) {
        EXPECT_FALSE(is_triangle(*f.m, {a, c, d}));
        EXPECT_FALSE(is_triad(*f.m, {a, c, d}));
      }
    }
  }
}

TEST(R10, Solvers) {
  Fixture f = fixture("r10");
  auto seq = solve_r10({f.m, f.x, f.y, {}, {}}, Mode::kGabow);
  EXPECT_EQ(seq.size(), 5u);
  EXPECT_TRUE(is_strictly_monotone(f.x, f.y, seq));
  EXPECT_EQ(apply_and_validate(*f.m, f.x, seq), f.y);
  EXPECT_TRUE(solve_r10({f.m, f.x, f.x, {}, {}}, Mode::kWhite).empty());

  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    BasisPair y = random_walk(*f.m, f.x, 12, {}, rng);
    auto s = solve_r10({f.m, f.x, y, {}, {}}, Mode::kWhite);
    EXPECT_LE(s.size(), 50u);
    EXPECT_EQ(apply_and_validate(*f.m, f.x, s), y);
  }
  BasisPair bad{f.x.first, f.x.first};
  EXPECT_THROW(solve_r10({f.m, f.x, bad, {}, {}}, Mode::kWhite),
               std::exception);
}

TEST(F7, BasesMatchMatrix) {
  auto m = f7_construct();
  auto mat = f7_matrix();
  EXPECT_EQ(m->bases().size(), 28u);
  EXPECT_EQ(m->kind(), "f7");
  for (oracle::Mask s = 0; s < 128; ++s) {
    ASSERT_EQ(m->rank(from_mask(s)), mat->rank(from_mask(s))) << s;
  }
  // The seven lines are exactly the 3-element circuits.
  auto rank = [&](oracle::Mask s) { return m->rank(from_mask(s)); };
  int lines = 0;
  for (auto c : oracle::circuits(7, rank)) lines += std::popcount(c) == 3;
  EXPECT_EQ(lines, 7);
}

TEST(F7, EveryDisjointPairReversesInThreeSteps) {
  auto m = f7_construct();
  int pairs = 0;
  for (auto b1 : m->bases()) {
    for (auto b2 : m->bases()) {
      if (b1 & b2) continue;
      BasisPair x{from_mask(b1), from_mask(b2)};
      auto seq = solve_f7({m, x, swapped(x), {}, {}}, Mode::kGabow);
      ASSERT_EQ(seq.size(), 3u);
      ASSERT_TRUE(is_strictly_monotone(x, swapped(x), seq));
      ASSERT_EQ(apply_and_validate(*m, x, seq), swapped(x));
      ++pairs;
    }
  }
  EXPECT_GT(pairs, 0);
}

TEST(Fixtures, AreValid) {
  for (const char* name : {"k4", "dt", "r10", "f7"}) {
    Fixture f = fixture(name);
    EXPECT_TRUE(is_basis_pair(*f.m, f.x)) << name;
    EXPECT_TRUE(is_basis_pair(*f.m, f.y)) << name;
    EXPECT_TRUE(compatible(f.x, f.y)) << name;
  }
  EXPECT_THROW(fixture("k5"), DomainError);
  EXPECT_EQ(parse_mode("gabow"), Mode::kGabow);
  EXPECT_THROW(parse_mode("black"), DomainError);
}

}  // namespace
}  // namespace symex
