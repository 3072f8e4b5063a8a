#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "coarsek/graph.hpp"

namespace coarsek {

/// Basis vector of the fibre H at a vertex. CopyEdge(e, j) is the vector
/// labelled by the j-th copy of edge e in an expanded graph; Ordinal(i) is the
/// i-th standard vector used by rank-k corner projections. The two families
/// never coincide.
struct SlotId {
  enum class Kind : std::uint8_t { CopyEdge = 0, Ordinal = 1 };

  Kind kind = Kind::Ordinal;
  Integer major = 0;  // edge id, or the ordinal
  Integer minor = 0;  // copy index, 0 for ordinals

  static SlotId copy_edge(EdgeId e, Integer copy) { return SlotId{Kind::CopyEdge, e.value, copy}; }
  static SlotId ordinal(Integer i) { return SlotId{Kind::Ordinal, i, 0}; }

  bool is_ordinal() const { return kind == Kind::Ordinal; }
  EdgeId edge() const { return EdgeId{major}; }
  std::string to_string() const;
  static SlotId parse(const std::string& text);

  auto operator<=>(const SlotId&) const = default;
};

/// The basis vector delta_vertex (x) slot.
struct BlockIndex {
  VertexId vertex;
  SlotId slot;
  auto operator<=>(const BlockIndex&) const = default;
};

/// Sorted finite set of basis vectors: the ambient space of an operator.
class Basis {
 public:
  Basis() = default;
  explicit Basis(std::vector<BlockIndex> elements);

  /// Every vertex paired with every slot.
  static std::shared_ptr<const Basis> product(const std::vector<VertexId>& vertices,
                                              const std::vector<SlotId>& slots);
  static std::shared_ptr<const Basis> merge(const Basis& a, const Basis& b);

  std::size_t size() const { return elements_.size(); }
  const BlockIndex& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<BlockIndex>& elements() const { return elements_; }
  std::optional<std::size_t> find(const BlockIndex& b) const;
  bool contains(const BlockIndex& b) const { return find(b).has_value(); }
  bool contains_all(const Basis& other) const;

  VertexId min_vertex() const;
  VertexId max_vertex() const;
  std::vector<VertexId> vertices() const;

  bool operator==(const Basis& other) const { return elements_ == other.elements_; }

 private:
  std::vector<BlockIndex> elements_;
};

using BasisPtr = std::shared_ptr<const Basis>;

struct OperatorEntry {
  BlockIndex row;
  BlockIndex col;
  Integer value;
};

/// Finite integer matrix over a Basis, stored as compressed rows with sorted
/// columns. Zero entries are never stored.
class SparseBlockOperator {
 public:
  /// Operator on the empty basis.
  SparseBlockOperator() : SparseBlockOperator(std::make_shared<const Basis>()) {}
  explicit SparseBlockOperator(BasisPtr basis);

  /// Sums duplicate (row, col) pairs; entries outside the basis are rejected.
  static SparseBlockOperator from_entries(BasisPtr basis, const std::vector<OperatorEntry>& entries);
  static SparseBlockOperator from_indexed(BasisPtr basis,
                                          std::vector<std::tuple<std::size_t, std::size_t, Integer>> triplets);
  static SparseBlockOperator identity(BasisPtr basis);
  /// Diagonal 0/1 operator selecting the basis vectors for which `keep` holds.
  template <typename Pred>
  static SparseBlockOperator diagonal_projection(BasisPtr basis, Pred keep);

  const BasisPtr& basis() const { return basis_; }
  std::size_t nnz() const { return values_.size(); }
  bool is_zero() const { return values_.empty(); }

  /// Value at basis positions (r, c).
  Integer at(std::size_t r, std::size_t c) const;
  Integer at(const BlockIndex& r, const BlockIndex& c) const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t r = 0; r + 1 < row_ptr_.size(); ++r)
      for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) f(r, cols_[k], values_[k]);
  }

  /// Entries of row r as (column position, value).
  std::vector<std::pair<std::size_t, Integer>> row(std::size_t r) const;
  std::vector<OperatorEntry> entries() const;

  bool operator==(const SparseBlockOperator& other) const;

 private:
  BasisPtr basis_;
  std::vector<std::size_t> row_ptr_;
  std::vector<std::size_t> cols_;
  std::vector<Integer> values_;

  friend SparseBlockOperator compose(const SparseBlockOperator&, const SparseBlockOperator&);
};

template <typename Pred>
SparseBlockOperator SparseBlockOperator::diagonal_projection(BasisPtr basis, Pred keep) {
  std::vector<std::tuple<std::size_t, std::size_t, Integer>> t;
  for (std::size_t i = 0; i < basis->size(); ++i)
    if (keep((*basis)[i])) t.emplace_back(i, i, 1);
  return from_indexed(std::move(basis), std::move(t));
}

/// Exact product a * b; both must live on equal bases.
SparseBlockOperator compose(const SparseBlockOperator& a, const SparseBlockOperator& b);
SparseBlockOperator adjoint(const SparseBlockOperator& a);
SparseBlockOperator add(const SparseBlockOperator& a, const SparseBlockOperator& b);
SparseBlockOperator subtract(const SparseBlockOperator& a, const SparseBlockOperator& b);
SparseBlockOperator minus_identity(const SparseBlockOperator& a);

/// How to fill basis vectors that a smaller operator did not see.
enum class Extension { Zero, Identity };
/// Re-express `a` on a larger basis.
SparseBlockOperator embed(const SparseBlockOperator& a, BasisPtr larger, Extension ext);
/// Keep only entries whose row and column both lie in `smaller`.
SparseBlockOperator restrict_to(const SparseBlockOperator& a, BasisPtr smaller);

/// Least R with d(row vertex, col vertex) <= R over all nonzero entries.
/// Throws PreconditionError if some entry joins vertices at infinite distance.
Integer propagation(const SparseBlockOperator& a, const Metric& m);

/// Rank over Q of the (x, y) block, i.e. the matrix of entries with row vertex x
/// and column vertex y.
std::size_t block_rank(const SparseBlockOperator& a, VertexId x, VertexId y);
/// Rank of every nonzero (row vertex, column vertex) block.
std::map<std::pair<VertexId, VertexId>, std::size_t> block_ranks(const SparseBlockOperator& a);
/// Maximum block rank over all nonzero blocks.
std::size_t max_block_rank(const SparseBlockOperator& a);

/// Exactly one nonzero entry, equal to 1, in every row and every column.
bool is_permutation(const SparseBlockOperator& a);
bool is_diagonal(const SparseBlockOperator& a);
/// a = a* = a^2.
bool is_projection(const SparseBlockOperator& a);

/// Interval of vertices on which identities are asserted, surrounded by a
/// margin where truncation artifacts are tolerated.
struct Window {
  VertexId first;
  VertexId last;
  Integer margin = 0;

  static Window centered(Integer radius, Integer margin) {
    return Window{VertexId{-radius}, VertexId{radius}, margin};
  }
  bool in_interior(VertexId v) const { return first <= v && v <= last; }
  /// Vertex range an operator must be generated on for this window.
  VertexId outer_first() const { return VertexId{first.value - margin}; }
  VertexId outer_last() const { return VertexId{last.value + margin}; }
};

/// a* a = a a* = 1 on every interior basis vector of w.
bool is_unitary_on(const SparseBlockOperator& a, const Window& w);
/// a* a = a a* = 1 on the whole basis.
bool is_unitary(const SparseBlockOperator& a);

class MarginError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Forward bilateral shift delta_x -> delta_{x+1} on the single slot O1,
/// truncated to the outer range of w.
SparseBlockOperator forward_shift(const Window& w);

/// Details of an index computation on the integer line.
struct IndexPairing {
  Integer index = 0;
  Integer propagation = 0;
  /// Interior diagonal trace of P - u* P u at vertices outside
  /// [-propagation, propagation - 1]; zero whenever the central sum is exact.
  Integer far_trace = 0;
};

/// Tr(P - u* P u) over the interior of w, P the projection onto vertices >= 0.
/// The forward shift delta_x -> delta_{x+1} has index -1.
IndexPairing index_pairing_details(const SparseBlockOperator& u, const Window& w);
Integer index_pairing(const SparseBlockOperator& u, const Window& w);

/// Sorted `row_vertex row_slot col_vertex col_slot value` lines.
std::string dump(const SparseBlockOperator& a);
/// Inverse of dump() over an explicit basis.
SparseBlockOperator parse_dump(BasisPtr basis, const std::string& text);

}  // namespace coarsek
