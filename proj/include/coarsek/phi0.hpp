#pragma once

#include <optional>
#include <vector>

#include "coarsek/chains.hpp"
#include "coarsek/expanded_graph.hpp"
#include "coarsek/operator.hpp"

namespace coarsek {

/// Diagonal projections (f_c, g_c): at x, f_c is the corner p_{c_x} when
/// c_x >= 0 and g_c is p_{-c_x} when c_x <= 0, on Ordinal slots 1..|c_x|.
struct ProjectionPair {
  SparseBlockOperator f;
  SparseBlockOperator g;
  Chain0 chain;
};

/// The pair over the vertices of g with Ordinal(1..max |c_x|) slots.
ProjectionPair build_projection_pair(const OrientedGraph& g, const Chain0& c);
/// The pair over an explicit basis (which must hold enough Ordinal slots).
ProjectionPair build_projection_pair(BasisPtr basis, const Chain0& c);
/// The pair of a banded chain restricted to the window plus margin.
ProjectionPair build_projection_pair(const BandedZChain& c, const Window& w);

/// Sum over x of rank f_x - rank g_x.
Integer k0_signature(const ProjectionPair& p);

/// Block-diagonal permutation S with S p S* = q, for diagonal projections p, q
/// of equal rank at every vertex. Supports are matched in basis order.
std::optional<SparseBlockOperator> per_vertex_equivalence(const SparseBlockOperator& p,
                                                          const SparseBlockOperator& q);

struct VertexRanks {
  VertexId vertex;
  Integer inflow = 0;   // i(x)
  Integer outflow = 0;  // o(x)
  Integer coefficient = 0;
  std::size_t rank_vstar_v = 0;
  std::size_t rank_v_vstar = 0;
};

/// The partial isometry V a_{x,e} = b_{t(e),e} for c = d(gamma), together
/// with every projection needed to check [f_c] = [g_c] blockwise.
///
/// A_x is spanned by the slots of the edges leaving x and B_x by those
/// entering x, so V*V has rank o(x) and V V* has rank i(x) at x. Hence
/// V V* ~ f' = p_{i(x)} and V* V ~ g' = p_{o(x)}.
struct BoundaryWitness {
  ExpandedGraph expanded;
  BasisPtr basis;
  SparseBlockOperator v;
  SparseBlockOperator proj_a;
  SparseBlockOperator proj_b;
  SparseBlockOperator f_prime;
  SparseBlockOperator g_prime;
  ProjectionPair pair;
  std::vector<VertexRanks> ranks;

  // Verified facts.
  bool vstar_v_is_proj_a = false;
  bool v_vstar_is_proj_b = false;
  bool ranks_match_flow = false;
  bool flow_matches_chain = false;
  bool f_prime_equivalent = false;  // S V V* S* = f'
  bool g_prime_equivalent = false;  // S V* V S* = g'
  bool excess_equivalent = false;   // f' - f_c ~ g' - g_c, both projections
  Integer propagation = 0;          // in the metric of G
  std::optional<VertexId> failing_vertex;

  bool all_passed() const {
    return vstar_v_is_proj_a && v_vstar_is_proj_b && ranks_match_flow && flow_matches_chain && f_prime_equivalent &&
           g_prime_equivalent && excess_equivalent && propagation <= 1;
  }
};

BoundaryWitness boundary_witness(const OrientedGraph& g, const Chain1& gamma);

}  // namespace coarsek
