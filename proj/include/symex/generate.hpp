// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SYMEX_GENERATE_HPP_
#define SYMEX_GENERATE_HPP_

#include <cstdint>
#include <random>

#include "symex/exchange.hpp"
#include "symex/graph.hpp"
#include "symex/matroid.hpp"

namespace symex {

// All generators draw from std::mt19937_64 and reduce raw outputs with
// `% n`; no distribution objects are used, so streams are reproducible
// across standard libraries.
using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int n) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

// Graph on n vertices with 2n - 2 edges that splits into two spanning
// trees: the union of two random trees, accepted after a partition check.
LabeledGraph random_bispanning(int n, Rng& rng);

// Random simple 4-regular graph on n >= 6 vertices that contains a
// triangle; built by random pairing with rejection.
Graph random_four_regular(int n, Rng& rng);

// Applies `steps` uniformly chosen valid exchanges avoiding `forbidden`.
BasisPair random_walk(const Matroid& m, const BasisPair& start, int steps,
                      const ElemSet& forbidden, Rng& rng);

// Edges spanning at most three vertices, chosen at random among those
// lying in one basis of x (so they may be frozen).
ElemSet random_forbidden(const Graph& g, const BasisPair& x, Rng& rng);

}  // namespace symex

#endif  // SYMEX_GENERATE_HPP_
