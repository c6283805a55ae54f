// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SYMEX_TREE_GEN_HPP_
#define SYMEX_TREE_GEN_HPP_

#include <optional>
#include <string>
#include <vector>

#include "symex/generate.hpp"
#include "symex/pipeline.hpp"

namespace symex {

// A decomposition tree, its composed matroid and a disjoint basis pair.
struct ComposedInstance {
  std::string name;
  DecompositionTree tree;
  MatroidPtr m;
  BasisPair x;
};

// Root: random bispanning graph. Each leaf is 2-summed onto a distinct
// root edge and is one of: a bispanning graph, R10, or F7 carrying a
// graphic leaf with |E| = 2r - 1 (so that |E| = 2r overall).
DecompositionTree random_two_sum_star(int leaves, Rng& rng);

// Root: union of two spanning trees with `leaves` vertex-disjoint planted
// triangles. Each triangle is 3-summed with a random simple 4-regular
// graph whose triangle passes the sparsity test.
DecompositionTree random_three_sum_star(int leaves, Rng& rng);

// Fixed shapes with at most 16 elements: two K4s, F7 with K4 - e, R10
// with K4, a chain of three K4s, and the 8-edge wheel with the octahedron.
std::vector<std::pair<std::string, DecompositionTree>> small_trees();

// Composes the tree and draws a pair of disjoint bases; none when the
// composed matroid has no such pair.
std::optional<ComposedInstance> make_composed_instance(
    const std::string& name, const DecompositionTree& tree);

}  // namespace symex

#endif  // SYMEX_TREE_GEN_HPP_
