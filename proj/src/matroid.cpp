// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#include "symex/matroid.hpp"

#include <bit>
#include <utility>

#include "symex/errors.hpp"

namespace symex {

Matroid::Matroid(std::vector<std::string> labels)
    : labels_(std::move(labels)) {}

Elem Matroid::find(const std::string& label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  throw DomainError("unknown element label '" + label + "'");
}

ElemSet Matroid::find_all(const std::vector<std::string>& labels) const {
  ElemSet out;
  for (const auto& l : labels) out.push_back(find(l));
  ElemSet norm = normalized(out);
  if (norm.size() != out.size()) throw DomainError("repeated element label");
  return norm;
}

std::vector<std::string> Matroid::labels_of(const ElemSet& s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (Elem e : s) out.push_back(label(e));
  return out;
}

void Matroid::check_elements(const ElemSet& s) const {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= size()) {
      throw DomainError("element " + std::to_string(s[i]) +
                        " outside the ground set");
    }
    if (i > 0 && s[i - 1] >= s[i]) {
      throw DomainError("element set is not sorted and duplicate-free");
    }
  }
}

int Matroid::rank(const ElemSet& s) const {
  check_elements(s);
  return rank_impl(s);
}

int Matroid::full_rank() const {
  std::call_once(rank_once_, [this] { full_rank_ = rank_impl(ground()); });
  return full_rank_;
}

bool Matroid::is_independent(const ElemSet& s) const {
  return rank(s) == static_cast<int>(s.size());
}

bool Matroid::is_basis(const ElemSet& s) const {
  return static_cast<int>(s.size()) == full_rank() && is_independent(s);
}

ElemSet Matroid::fundamental_circuit(const ElemSet& basis, Elem e) const {
  if (!is_basis(basis)) throw DomainError("fundamental circuit needs a basis");
  if (e < 0 || e >= size() || contains(basis, e)) {
    throw DomainError("fundamental circuit needs an element outside B");
  }
  return circuit_impl(basis, e);
}

ElemSet Matroid::circuit_impl(const ElemSet& basis, Elem e) const {
  ElemSet out{e};
  ElemSet plus = with(basis, e);
  const int r = full_rank();
  for (Elem x : basis) {
    if (rank_impl(without(plus, x)) == r) out.push_back(x);
  }
  return normalized(out);
}

MatroidPtr Matroid::dual() const {
  return std::make_shared<DualMatroid>(shared_from_this());
}

MatroidPtr Matroid::minor(const ElemSet& contract, const ElemSet& del) const {
  check_elements(contract);
  check_elements(del);
  if (!disjoint(contract, del)) {
    throw DomainError("contracted and deleted sets overlap");
  }
  return minor_impl(contract, del);
}

MatroidPtr Matroid::restriction(const ElemSet& keep) const {
  check_elements(keep);
  return minor_impl({}, set_difference(ground(), keep));
}

MatroidPtr Matroid::contraction(const ElemSet& contract) const {
  return minor(contract, {});
}

MatroidPtr Matroid::minor_impl(const ElemSet& contract,
                               const ElemSet& del) const {
  return std::make_shared<MinorMatroid>(shared_from_this(), contract, del);
}

std::vector<std::string> surviving_labels(const Matroid& m,
                                          const ElemSet& removed) {
  std::vector<std::string> out;
  for (Elem e = 0; e < m.size(); ++e) {
    if (!contains(removed, e)) out.push_back(m.label(e));
  }
  return out;
}

// ---- graphic ----

GraphicMatroid::GraphicMatroid(Graph g, std::vector<std::string> labels)
    : Matroid(std::move(labels)), graph_(std::move(g)) {
  if (graph_.num_edges() != size()) {
    throw DomainError("graph edge count does not match label count");
  }
}

int GraphicMatroid::rank_impl(const ElemSet& s) const {
  return forest_rank(graph_, s);
}

MatroidPtr GraphicMatroid::dual() const {
  return std::make_shared<CographicMatroid>(graph_, labels());
}

MatroidPtr GraphicMatroid::minor_impl(const ElemSet& contract,
                                      const ElemSet& del) const {
  ElemSet removed = set_union(contract, del);
  return std::make_shared<GraphicMatroid>(graph_minor(graph_, contract, del),
                                          surviving_labels(*this, removed));
}

ElemSet GraphicMatroid::circuit_impl(const ElemSet& basis, Elem e) const {
  auto [u, v] = graph_.edges[e];
  return with(tree_path(graph_, basis, u, v), e);
}

// ---- cographic ----

CographicMatroid::CographicMatroid(Graph g, std::vector<std::string> labels)
    : Matroid(std::move(labels)), graph_(std::move(g)) {
  if (graph_.num_edges() != size()) {
    throw DomainError("graph edge count does not match label count");
  }
  graph_rank_ = forest_rank(graph_, ground());
}

int CographicMatroid::rank_impl(const ElemSet& s) const {
  return static_cast<int>(s.size()) - graph_rank_ +
         forest_rank(graph_, set_difference(ground(), s));
}

MatroidPtr CographicMatroid::dual() const {
  return std::make_shared<GraphicMatroid>(graph_, labels());
}

MatroidPtr CographicMatroid::minor_impl(const ElemSet& contract,
                                        const ElemSet& del) const {
  ElemSet removed = set_union(contract, del);
  return std::make_shared<CographicMatroid>(graph_minor(graph_, del, contract),
                                            surviving_labels(*this, removed));
}

// ---- binary ----

BinaryMatroid::BinaryMatroid(std::vector<BitVec> columns, std::size_t num_rows,
                             std::vector<std::string> labels)
    : Matroid(std::move(labels)),
      columns_(std::move(columns)),
      num_rows_(num_rows) {
  if (static_cast<int>(columns_.size()) != size()) {
    throw DomainError("column count does not match label count");
  }
  for (const BitVec& c : columns_) {
    if (c.size() != num_rows_) throw DomainError("ragged GF(2) matrix");
  }
}

std::shared_ptr<const BinaryMatroid> BinaryMatroid::from_rows(
    const std::vector<BitVec>& rows, std::vector<std::string> labels) {
  const std::size_t n = labels.size();
  for (const BitVec& r : rows) {
    if (r.size() != n) throw DomainError("row length does not match labels");
  }
  return std::make_shared<BinaryMatroid>(transpose(rows, n), rows.size(),
                                         std::move(labels));
}

int BinaryMatroid::rank_impl(const ElemSet& s) const {
  XorBasis basis(num_rows_);
  for (Elem e : s) {
    basis.insert(columns_[e]);
    if (basis.dim() == static_cast<int>(num_rows_)) break;
  }
  return basis.dim();
}

MatroidPtr BinaryMatroid::dual() const {
  auto null = nullspace(rows(), columns_.size());
  return from_rows(null, labels());
}

MatroidPtr BinaryMatroid::minor_impl(const ElemSet& contract,
                                     const ElemSet& del) const {
  // Quotient by span(contract): reduce every column against a reduced
  // echelon basis of that span, then drop rows that became zero.
  std::vector<BitVec> span;
  for (Elem e : contract) span.push_back(columns_[e]);
  span = row_space_basis(span, num_rows_);
  std::vector<std::size_t> pivot(span.size());
  for (std::size_t i = 0; i < span.size(); ++i) pivot[i] = span[i].find_first();

  ElemSet removed = set_union(contract, del);
  std::vector<BitVec> kept;
  for (Elem e = 0; e < size(); ++e) {
    if (contains(removed, e)) continue;
    BitVec v = columns_[e];
    for (std::size_t i = 0; i < span.size(); ++i) {
      if (v.test(pivot[i])) v ^= span[i];
    }
    kept.push_back(std::move(v));
  }
  std::vector<BitVec> rows_out;
  for (BitVec& r : transpose(kept, num_rows_)) {
    if (r.any()) rows_out.push_back(std::move(r));
  }
  rows_out = row_space_basis(rows_out, kept.size());
  std::vector<std::string> lab = surviving_labels(*this, removed);
  if (rows_out.empty()) {
    return std::make_shared<BinaryMatroid>(
        std::vector<BitVec>(lab.size(), BitVec(0)), 0, std::move(lab));
  }
  return from_rows(rows_out, std::move(lab));
}

// ---- views ----

DualMatroid::DualMatroid(MatroidPtr base)
    : Matroid(base->labels()), base_(std::move(base)) {}

int DualMatroid::rank_impl(const ElemSet& s) const {
  return static_cast<int>(s.size()) - base_->full_rank() +
         base_->rank(set_difference(ground(), s));
}

MinorMatroid::MinorMatroid(MatroidPtr base, ElemSet contract, ElemSet del)
    : Matroid(surviving_labels(*base, set_union(contract, del))),
      base_(std::move(base)),
      contract_(std::move(contract)),
      delete_(std::move(del)) {
  ElemSet removed = set_union(contract_, delete_);
  for (Elem e = 0; e < base_->size(); ++e) {
    if (!contains(removed, e)) map_.push_back(e);
  }
  contract_rank_ = base_->rank(contract_);
}

int MinorMatroid::rank_impl(const ElemSet& s) const {
  return base_->rank(set_union(mapped(s, map_), contract_)) - contract_rank_;
}

MatroidPtr MinorMatroid::minor_impl(const ElemSet& contract,
                                    const ElemSet& del) const {
  return std::make_shared<MinorMatroid>(
      base_, set_union(contract_, mapped(contract, map_)),
      set_union(delete_, mapped(del, map_)));
}

BasisListMatroid::BasisListMatroid(std::vector<std::string> labels,
                                   std::vector<ElemSet> bases)
    : Matroid(std::move(labels)) {
  if (size() > 64) throw DomainError("basis-list matroid limited to 64");
  if (bases.empty()) throw DomainError("basis list is empty");
  for (ElemSet& b : bases) {
    b = normalized(std::move(b));
    check_elements(b);
    if (b.size() != bases.front().size()) {
      throw DomainError("bases of unequal size");
    }
    bases_.push_back(to_mask(b));
  }
}

int BasisListMatroid::rank_impl(const ElemSet& s) const {
  const std::uint64_t m = to_mask(s);
  int best = 0;
  for (std::uint64_t b : bases_) best = std::max(best, std::popcount(m & b));
  return best;
}

// ---- helpers ----

std::shared_ptr<const GraphicMatroid> make_graphic(
    const Graph& g, std::vector<std::string> labels) {
  return std::make_shared<GraphicMatroid>(g, std::move(labels));
}

std::shared_ptr<const GraphicMatroid> make_graphic(const LabeledGraph& lg) {
  return make_graphic(lg.graph, lg.edge_labels);
}

ElemSet greedy_basis(const Matroid& m, const ElemSet& s) {
  ElemSet out;
  int r = 0;
  for (Elem e : s) {
    ElemSet trial = with(out, e);
    if (m.rank(trial) > r) {
      out = std::move(trial);
      ++r;
    }
  }
  return out;
}

ElemSet greedy_basis(const Matroid& m) { return greedy_basis(m, m.ground()); }

std::shared_ptr<const BinaryMatroid> binary_standard_form(const Matroid& m) {
  ElemSet basis = greedy_basis(m);
  const std::size_t r = basis.size();
  std::vector<int> row_of(m.size(), -1);
  for (std::size_t i = 0; i < r; ++i) row_of[basis[i]] = static_cast<int>(i);
  std::vector<BitVec> cols(m.size(), BitVec(r));
  for (Elem e = 0; e < m.size(); ++e) {
    if (row_of[e] >= 0) {
      cols[e].set(row_of[e]);
      continue;
    }
    for (Elem x : m.fundamental_circuit(basis, e)) {
      if (x != e) cols[e].set(row_of[x]);
    }
  }
  return std::make_shared<BinaryMatroid>(std::move(cols), r, m.labels());
}

std::shared_ptr<const BinaryMatroid> as_binary(const Matroid& m) {
  if (auto b = dynamic_cast<const BinaryMatroid*>(&m)) {
    return std::static_pointer_cast<const BinaryMatroid>(b->shared_from_this());
  }
  if (auto rep = m.representation()) return rep;
  if (auto d = dynamic_cast<const DualMatroid*>(&m)) {
    return std::dynamic_pointer_cast<const BinaryMatroid>(
        as_binary(*d->base())->dual());
  }
  if (auto g = dynamic_cast<const GraphicMatroid*>(&m)) {
    auto rows = row_space_basis(incidence_rows(g->graph()), m.size());
    if (rows.empty()) {
      return std::make_shared<BinaryMatroid>(
          std::vector<BitVec>(m.size(), BitVec(0)), 0, m.labels());
    }
    return BinaryMatroid::from_rows(rows, m.labels());
  }
  if (auto c = dynamic_cast<const CographicMatroid*>(&m)) {
    auto rows = nullspace(incidence_rows(c->graph()), m.size());
    if (rows.empty()) {
      return std::make_shared<BinaryMatroid>(
          std::vector<BitVec>(m.size(), BitVec(0)), 0, m.labels());
    }
    return BinaryMatroid::from_rows(rows, m.labels());
  }
  return binary_standard_form(m);
}

}  // namespace symex
