// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SYMEX_IO_HPP_
#define SYMEX_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>

#include "symex/pipeline.hpp"

namespace symex {

// GF(2) matrix text: a line of column labels, then one line of 0/1
// characters per row. Blank lines and `#` comments are ignored.
std::shared_ptr<const BinaryMatroid> parse_matrix_text(const std::string& text);
std::string format_matrix_text(const BinaryMatroid& m);

// Tree JSON: {"nodes":[{"id","tag","graph"|"matrix"|"labels"}],
//             "sums":[{"a","b","arity","shared":[...]}]}.
// graph and matrix payloads use the text formats above; r10 and f7 nodes
// take an optional list of ten or seven labels.
DecompositionTree parse_tree_json(const std::string& text);
std::string format_tree_json(const DecompositionTree& tree);

// A parsed instance file. The matroid comes from exactly one of graph,
// graph_file, matrix, matrix_file, tree, tree_file or builtin (k4, dt,
// r10, f7). x1/x2 default to the builtin fixture or to a computed pair of
// disjoint bases; y1/y2 default to the reversed pair.
struct InstanceFile {
  Instance inst;
  Mode mode = Mode::kWhite;
  std::optional<DecompositionTree> tree;
};

// Files named inside the JSON resolve relative to `base`. Throws
// ParseError on malformed input or unknown labels.
InstanceFile parse_instance_json(const std::string& text,
                                 const std::filesystem::path& base = {});
InstanceFile load_instance(const std::filesystem::path& path);

// Serializes with inline payloads (graph text, matrix text or tree).
std::string format_instance_json(const InstanceFile& file);

// Sequences: text lines `k: e <-> f` or a JSON array [{"e":..,"f":..}].
ExchangeSequence parse_sequence(const Matroid& m, const std::string& text);
std::string format_sequence_json(const Matroid& m, const ExchangeSequence& seq);

std::string format_report_text(const Matroid& m, const SolveReport& report);
std::string format_report_json(const Matroid& m, const SolveReport& report);

std::string read_file(const std::filesystem::path& path);

}  // namespace symex

#endif  // SYMEX_IO_HPP_
