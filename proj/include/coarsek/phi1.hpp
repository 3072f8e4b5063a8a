#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "coarsek/expanded_graph.hpp"
#include "coarsek/operator.hpp"

namespace coarsek {

/// Per-vertex bijections alpha_x : I(x) -> O(x) of an expanded graph, stored
/// as a successor map on edge positions: next[e] = alpha_{t(e)}(e).
struct BijectionFamily {
  std::vector<std::optional<std::size_t>> next;

  bool operator==(const BijectionFamily&) const = default;
};

class NotACycleError : public PreconditionError {
 public:
  NotACycleError(VertexId v, Integer inflow, Integer outflow);
  VertexId vertex;
};

/// At every vertex, I(x) and O(x) in canonical order matched in order.
/// Throws NotACycleError at the first unbalanced vertex.
BijectionFamily canonical_alpha(const ExpandedGraph& g);
/// Same matching, but only at balanced vertices; others stay undefined.
BijectionFamily canonical_alpha_where_balanced(const ExpandedGraph& g);
/// Canonical family with the matchings at some vertices replaced.
/// Each override lists (incoming slot, outgoing slot) pairs.
BijectionFamily alpha_with_overrides(const ExpandedGraph& g,
                                     const std::map<VertexId, std::vector<std::pair<SlotId, SlotId>>>& overrides);
/// Independent uniformly random matching at every balanced vertex.
BijectionFamily random_alpha(const ExpandedGraph& g, std::mt19937_64& rng);

bool is_valid_at(const ExpandedGraph& g, const BijectionFamily& alpha, VertexId x);
bool is_valid(const ExpandedGraph& g, const BijectionFamily& alpha);

/// The permutation unitary: delta_x (x) e_e goes to delta_{t(alpha_x e)} (x)
/// e_{alpha_x e} when t(e) = x and stays put otherwise.
struct CycleUnitary {
  ExpandedGraph expanded;
  BijectionFamily alpha;
  SparseBlockOperator u;
};

/// Over the basis (vertices of g) x (slots of G). Throws NotACycleError.
CycleUnitary build_cycle_unitary(const OrientedGraph& g, const Chain1& gamma);
CycleUnitary build_cycle_unitary(const OrientedGraph& g, const Chain1& gamma, const BijectionFamily& alpha);
/// Over an explicit basis; images leaving the basis are dropped, so the
/// result is a partial permutation near the edge of a truncation window.
SparseBlockOperator cycle_permutation(const ExpandedGraph& g, const BijectionFamily& alpha, const BasisPtr& basis);

struct UnitaryCertificate {
  bool unitary = false;
  bool permutation = false;
  /// Every nonzero entry of U - 1 joins equal or G-adjacent vertices.
  bool entries_adjacent = false;
  Integer propagation = 0;
  /// Every block (y, x) of U - 1 has rank at most the valence of x in G.
  bool block_ranks_bounded = false;
  std::size_t max_block_rank = 0;
  std::string failure_locus;

  bool all_passed() const { return unitary && permutation && entries_adjacent && propagation <= 1 && block_ranks_bounded; }
};

UnitaryCertificate certify_cycle_unitary(const CycleUnitary& cu);

/// Permutation of {0, ..., |k|-1} used at vertex x of a line window:
/// alpha_x sends the j-th incoming copy to the sigma(j)-th outgoing copy.
using LineMatching = std::function<std::vector<std::size_t>(VertexId)>;

/// Family on a line expansion from a per-vertex matching; identity when empty.
BijectionFamily line_alpha(const ExpandedGraph& g, const LineMatching& matching);

/// Truncation of U_gamma, gamma = k on every edge of Z, to the window plus margin.
CycleUnitary z_line_cycle_unitary(Integer k, const Window& w, const LineMatching& matching = {});

/// index_pairing of U_gamma for gamma = k on Z.
Integer phi1_on_z(Integer k, const Window& w);

/// Everything the well-definedness check (independence of alpha) constructs.
struct AlphaIndependenceReport {
  SparseBlockOperator u_alpha;
  SparseBlockOperator u_beta;

  // Block-diagonal V with v_x e_{alpha_x e} = e_{beta_x e} on the slots at x.
  SparseBlockOperator v;
  bool v_block_diagonal = false;
  std::size_t v_max_block_rank = 0;  // of V - 1

  // The intermediate U'(delta_x (x) e_e) = delta_{t(alpha_x e)} (x) e_{beta_x e} for t(e) = x.
  SparseBlockOperator u_prime;
  bool u_prime_is_permutation = false;
  bool u_prime_equals_conjugate = false;  // U' = V* U^alpha V
  std::string u_prime_locus;

  // Conjugator W with U^beta = W* (V* U^alpha V) W, searched among permutations.
  std::optional<SparseBlockOperator> w;
  bool conjugator_identity = false;
  Integer w_propagation = 0;
  std::vector<std::size_t> cycle_type_alpha;  // orbit lengths > 1, sorted
  std::vector<std::size_t> cycle_type_beta;

  // Local factorization U^beta = R U^alpha with R a direct sum over x of
  // permutations of the finite sets {delta_{t(f)} (x) e_f : f in O(x)}.
  SparseBlockOperator r;
  bool factorization_exact = false;
  bool r_is_local = false;
  Integer r_propagation = 0;
  std::size_t r_max_part = 0;

  bool literal_identities_hold() const { return u_prime_equals_conjugate && w.has_value() && conjugator_identity; }
  bool classes_equal() const { return v_block_diagonal && factorization_exact && r_is_local; }
};

/// Compares U^alpha and U^beta over `basis`. With a window, identities are
/// checked on interior rows and the conjugator is the line alignment (a
/// block-diagonal W); without one, on the full basis by orbit matching.
AlphaIndependenceReport verify_alpha_independence(const ExpandedGraph& g, const BijectionFamily& alpha,
                                                  const BijectionFamily& beta, const BasisPtr& basis,
                                                  const Metric& metric, const Window* window = nullptr);
AlphaIndependenceReport verify_alpha_independence(const OrientedGraph& g, const Chain1& gamma,
                                                  const BijectionFamily& alpha, const BijectionFamily& beta);

/// Total order on the edges of G: position[e] is the rank of edge e.
struct EdgeNumbering {
  std::vector<std::size_t> position;
  static EdgeNumbering canonical(const ExpandedGraph& g);
};

struct Compression {
  BasisPtr basis;                   // U's basis plus Ordinal(1..n) at every vertex
  SparseBlockOperator t;            // direct sum of the per-vertex swaps T_x
  SparseBlockOperator u_extended;   // U, acting as 1 on the added slots
  SparseBlockOperator u_tilde;      // T* U T
  Integer slots = 0;                // n
  bool conjugation_exact = false;   // T U~ T* = U
  bool confined = false;            // U~ - 1 lives on Ordinal(1..n) slots
  bool unitary = false;
  std::string failure_locus;

  bool all_passed() const { return conjugation_exact && confined && unitary; }
};

/// T_x swaps Ordinal(j) with the j-th edge of I(x) in the given numbering.
/// Requires n >= max valence of G.
Compression compress_to_uniform(const CycleUnitary& cu, const EdgeNumbering& numbering, Integer n,
                                const Window* window = nullptr);

}  // namespace coarsek
