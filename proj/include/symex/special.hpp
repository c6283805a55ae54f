// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SYMEX_SPECIAL_HPP_
#define SYMEX_SPECIAL_HPP_

#include <memory>
#include <string>
#include <vector>

#include "symex/graph.hpp"
#include "symex/matroid.hpp"
#include "symex/reductions.hpp"

namespace symex {

enum class Mode { kWhite, kGabow };

std::string to_string(Mode mode);
// Accepts "white" and "gabow"; DomainError otherwise.
Mode parse_mode(const std::string& text);

// Signed-graphic matroid of a graph whose edges are all odd: a set is
// independent when every component has at most one cycle and that cycle
// is odd. rank(S) = |V| - (number of bipartite components of (V, S)).
class EvenCycleMatroid : public Matroid {
 public:
  EvenCycleMatroid(Graph g, std::vector<std::string> labels);
  const Graph& graph() const { return graph_; }
  std::string kind() const override { return "even-cycle"; }

 protected:
  int rank_impl(const ElemSet& s) const override;

 private:
  Graph graph_;
};

// R10 as the column matroid of the ten weight-3 vectors of GF(2)^5.
class R10Matroid : public BinaryMatroid {
 public:
  using BinaryMatroid::BinaryMatroid;
  std::string kind() const override { return "r10"; }
};

// F7 from its list of bases (all 3-sets that are not lines).
class FanoMatroid : public BasisListMatroid {
 public:
  using BasisListMatroid::BasisListMatroid;
  std::string kind() const override { return "f7"; }
};

// Edges of K5 in the order v1v2, v1v3, ..., v4v5, labelled "v<i>v<j>".
std::vector<std::string> r10_labels();
// Edge v_i v_j maps to the column with zeros in rows i and j.
std::shared_ptr<const R10Matroid> r10_construct(
    std::vector<std::string> labels = r10_labels());
std::shared_ptr<const EvenCycleMatroid> r10_even_cycle(
    std::vector<std::string> labels = r10_labels());

// Ground set a..g; the seven lines are abd, bce, acf, aeg, cdg, bfg, def.
std::shared_ptr<const FanoMatroid> f7_construct(
    std::vector<std::string> labels = {"a", "b", "c", "d", "e", "f", "g"});
// GF(2) columns a=001, b=010, c=100, d=011, e=110, f=101, g=111.
std::shared_ptr<const BinaryMatroid> f7_matrix();

struct Fixture {
  std::string name;
  MatroidPtr m;
  BasisPair x;
  BasisPair y;
};

// "k4", "dt", "r10" and "f7". DomainError for other names.
Fixture fixture(const std::string& name);

// Exhaustive solver for small matroids: disjointify with the reduction
// helpers, then breadth-first search (monotone for gabow). The result is
// optimal for the reduced instance. CapacityError above `cap` elements.
ExchangeSequence solve_exhaustive(const Instance& inst, Mode mode,
                                  int cap = 16);
ExchangeSequence solve_r10(const Instance& inst, Mode mode);
ExchangeSequence solve_f7(const Instance& inst, Mode mode);

}  // namespace symex

#endif  // SYMEX_SPECIAL_HPP_
