// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SYMEX_MATROID_HPP_
#define SYMEX_MATROID_HPP_

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "symex/elements.hpp"
#include "symex/gf2.hpp"
#include "symex/graph.hpp"

namespace symex {

class Matroid;
class BinaryMatroid;
using MatroidPtr = std::shared_ptr<const Matroid>;

// Rank oracle on the ground set {0, ..., size()-1}. Values are immutable;
// all queries are const and safe to issue concurrently.
class Matroid : public std::enable_shared_from_this<Matroid> {
 public:
  explicit Matroid(std::vector<std::string> labels);
  virtual ~Matroid() = default;
  Matroid(const Matroid&) = delete;
  Matroid& operator=(const Matroid&) = delete;

  int size() const { return static_cast<int>(labels_.size()); }
  ElemSet ground() const { return full_set(size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Elem e) const { return labels_.at(e); }
  // Element id of a label; DomainError when absent.
  Elem find(const std::string& label) const;
  ElemSet find_all(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(const ElemSet& s) const;

  // Throws DomainError on ids outside the ground set.
  int rank(const ElemSet& s) const;
  int full_rank() const;
  bool is_independent(const ElemSet& s) const;
  virtual bool is_basis(const ElemSet& s) const;
  // Unique circuit of basis + e; requires e outside the basis.
  ElemSet fundamental_circuit(const ElemSet& basis, Elem e) const;

  // Lazy or materialized views; the child keeps surviving elements in
  // increasing parent-id order.
  virtual MatroidPtr dual() const;
  MatroidPtr minor(const ElemSet& contract, const ElemSet& del) const;
  MatroidPtr restriction(const ElemSet& keep) const;
  MatroidPtr contraction(const ElemSet& contract) const;

  virtual std::string kind() const = 0;

  // A GF(2) representation the backend already holds, or null.
  virtual std::shared_ptr<const BinaryMatroid> representation() const {
    return nullptr;
  }

 protected:
  virtual int rank_impl(const ElemSet& s) const = 0;
  virtual MatroidPtr minor_impl(const ElemSet& contract,
                                const ElemSet& del) const;
  virtual ElemSet circuit_impl(const ElemSet& basis, Elem e) const;
  void check_elements(const ElemSet& s) const;

 private:
  std::vector<std::string> labels_;
  mutable std::once_flag rank_once_;
  mutable int full_rank_ = 0;
};

// Labels of the elements that survive a minor, in increasing id order.
std::vector<std::string> surviving_labels(const Matroid& m,
                                          const ElemSet& removed);

class GraphicMatroid : public Matroid {
 public:
  GraphicMatroid(Graph g, std::vector<std::string> labels);
  const Graph& graph() const { return graph_; }
  MatroidPtr dual() const override;
  std::string kind() const override { return "graphic"; }

 protected:
  int rank_impl(const ElemSet& s) const override;
  MatroidPtr minor_impl(const ElemSet& contract,
                        const ElemSet& del) const override;
  ElemSet circuit_impl(const ElemSet& basis, Elem e) const override;

 private:
  Graph graph_;
};

// Bond matroid M*(G) of a graph.
class CographicMatroid : public Matroid {
 public:
  CographicMatroid(Graph g, std::vector<std::string> labels);
  const Graph& graph() const { return graph_; }
  MatroidPtr dual() const override;
  std::string kind() const override { return "cographic"; }

 protected:
  int rank_impl(const ElemSet& s) const override;
  MatroidPtr minor_impl(const ElemSet& contract,
                        const ElemSet& del) const override;

 private:
  Graph graph_;
  int graph_rank_;
};

// Column matroid of a GF(2) matrix.
class BinaryMatroid : public Matroid {
 public:
  // `columns[j]` is column j as a vector over the rows.
  BinaryMatroid(std::vector<BitVec> columns, std::size_t num_rows,
                std::vector<std::string> labels);
  static std::shared_ptr<const BinaryMatroid> from_rows(
      const std::vector<BitVec>& rows, std::vector<std::string> labels);

  std::size_t num_rows() const { return num_rows_; }
  const std::vector<BitVec>& columns() const { return columns_; }
  std::vector<BitVec> rows() const { return transpose(columns_, num_rows_); }
  MatroidPtr dual() const override;
  std::string kind() const override { return "gf2"; }

 protected:
  int rank_impl(const ElemSet& s) const override;
  MatroidPtr minor_impl(const ElemSet& contract,
                        const ElemSet& del) const override;

 private:
  std::vector<BitVec> columns_;
  std::size_t num_rows_;
};

class DualMatroid : public Matroid {
 public:
  explicit DualMatroid(MatroidPtr base);
  MatroidPtr dual() const override { return base_; }
  const MatroidPtr& base() const { return base_; }
  std::string kind() const override { return "dual"; }

 protected:
  int rank_impl(const ElemSet& s) const override;

 private:
  MatroidPtr base_;
};

class MinorMatroid : public Matroid {
 public:
  MinorMatroid(MatroidPtr base, ElemSet contract, ElemSet del);
  // child id -> base id
  const std::vector<Elem>& base_ids() const { return map_; }
  std::string kind() const override { return "minor"; }

 protected:
  int rank_impl(const ElemSet& s) const override;
  MatroidPtr minor_impl(const ElemSet& contract,
                        const ElemSet& del) const override;

 private:
  MatroidPtr base_;
  ElemSet contract_;
  ElemSet delete_;
  std::vector<Elem> map_;
  int contract_rank_;
};

// Matroid given by an explicit list of bases (ground set of at most 64).
class BasisListMatroid : public Matroid {
 public:
  BasisListMatroid(std::vector<std::string> labels, std::vector<ElemSet> bases);
  const std::vector<std::uint64_t>& bases() const { return bases_; }
  std::string kind() const override { return "bases"; }

 protected:
  int rank_impl(const ElemSet& s) const override;

 private:
  std::vector<std::uint64_t> bases_;
};

std::shared_ptr<const GraphicMatroid> make_graphic(
    const Graph& g, std::vector<std::string> labels);
std::shared_ptr<const GraphicMatroid> make_graphic(const LabeledGraph& lg);

// Representation [I | A] from the fundamental circuits of a greedy basis.
// Exact whenever m is binary.
std::shared_ptr<const BinaryMatroid> binary_standard_form(const Matroid& m);

// The GF(2) representation of m when one is available without search
// (graphic, cographic and matrix backends); otherwise the standard form.
std::shared_ptr<const BinaryMatroid> as_binary(const Matroid& m);

// Greedy basis contained in s (lexicographically first).
ElemSet greedy_basis(const Matroid& m, const ElemSet& s);
ElemSet greedy_basis(const Matroid& m);

}  // namespace symex

#endif  // SYMEX_MATROID_HPP_
