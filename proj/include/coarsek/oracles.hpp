#pragma once

#include <optional>
#include <vector>

#include "coarsek/graph.hpp"
#include "coarsek/operator.hpp"

// Brute-force reference computations. None of them calls the elimination,
// composition or index code they are used to check.
namespace coarsek::oracle {

using Dense = std::vector<std::vector<Integer>>;

/// Vertex x edge incidence matrix built directly from d(e) = t(e) - s(e).
Dense incidence(const OrientedGraph& g);

/// Exact determinant by fraction-free elimination in 128-bit arithmetic.
__int128 determinant(const Dense& m);

/// Rank over the rationals by the same elimination.
std::size_t rank(const Dense& m);

/// gcd of all r x r minors (the r-th determinantal divisor), stopping early
/// once it reaches 1. Returns 0 if every r x r minor vanishes.
Integer determinantal_divisor(const Dense& m, std::size_t r);

struct GraphHomology {
  std::size_t h0_free_rank = 0;
  bool h0_torsion_free = false;
  std::size_t h1_rank = 0;
};

/// H0 and rank H1 from the incidence matrix via determinantal divisors.
GraphHomology graph_homology(const OrientedGraph& g);

/// Tr(P - u* P u) over the interior columns of w, from the entries of u alone.
Integer trace_index(const SparseBlockOperator& u, const Window& w);

/// True iff every column and every row of u holds exactly one entry, equal to 1.
bool is_permutation_matrix(const SparseBlockOperator& u);

}  // namespace coarsek::oracle
