#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coarsek/graph.hpp"
#include "coarsek/integer_matrix.hpp"

namespace coarsek {

/// Finite-support 0-chain: coefficient per vertex, zeros are not stored.
struct Chain0 {
  std::map<VertexId, Integer> coeffs;

  Integer at(VertexId v) const;
  void add(VertexId v, Integer c);
  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const Chain0&) const = default;
};

/// Finite-support 1-chain: coefficient per edge, zeros are not stored.
struct Chain1 {
  std::map<EdgeId, Integer> coeffs;

  Integer at(EdgeId e) const;
  void add(EdgeId e, Integer c);
  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const Chain1&) const = default;
};

Chain0 operator+(const Chain0& a, const Chain0& b);
Chain1 operator+(const Chain1& a, const Chain1& b);
Chain0 operator-(const Chain0& a);
Chain1 operator-(const Chain1& a);

/// Two-sided integer sequence that is constant outside a finite window, on the
/// vertices (degree 0) or on the edges [i, i+1] (degree 1) of the integer line.
struct BandedZChain {
  int degree = 0;
  Integer tail_left = 0;
  Integer tail_right = 0;
  Integer window_start = 0;
  std::vector<Integer> window_values;

  Integer at(Integer i) const;
  Integer window_end() const { return window_start + static_cast<Integer>(window_values.size()); }
  bool has_finite_support() const { return tail_left == 0 && tail_right == 0; }

  static BandedZChain constant(int degree, Integer value);
  /// The finite-support chain with the given values starting at `start`.
  static BandedZChain finite(int degree, Integer start, std::vector<Integer> values);
};

/// Equal as sequences (representations may differ).
bool same_sequence(const BandedZChain& a, const BandedZChain& b);

struct UniformBound {
  Integer bound = 1;  // strict: |coeff| < bound everywhere
};

UniformBound uniform_bound(const Chain0& c);
UniformBound uniform_bound(const Chain1& c);
UniformBound uniform_bound(const BandedZChain& c);

/// d(e) = t(e) - s(e), extended linearly.
Chain0 boundary(const OrientedGraph& g, const Chain1& gamma);
/// Boundary of a banded 1-chain on the Cayley graph of Z.
BandedZChain boundary(const BandedZChain& gamma);

/// Inflow i(x) and outflow o(x) of a 1-chain with its signs as given.
struct FlowBalance {
  std::map<VertexId, Integer> inflow;
  std::map<VertexId, Integer> outflow;
};
FlowBalance flow_balance(const OrientedGraph& g, const Chain1& gamma);

/// Cycle test computed both as d(gamma) = 0 and as i(x) = o(x) everywhere.
/// Throws std::logic_error if the two characterizations ever disagree.
bool is_cycle(const OrientedGraph& g, const Chain1& gamma);
/// First vertex where i(x) != o(x), if any.
std::optional<VertexId> cycle_violation(const OrientedGraph& g, const Chain1& gamma);
bool is_cycle(const BandedZChain& gamma);

/// Finitely generated abelian group Z^free_rank + sum Z/d_i.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> elementary_divisors;  // all nonzero Smith divisors, including 1s

  std::vector<Integer> torsion() const;
  std::string to_string() const;
};

struct FiniteHomology {
  AbelianGroup h0;
  std::size_t h1_rank = 0;
  std::vector<Chain1> h1_basis;
  std::size_t components = 0;
};

/// H0 = coker d and H1 = ker d of the boundary map of a finite graph.
FiniteHomology homology_finite(const OrientedGraph& g);

/// Boundary matrix, rows indexed by vertices and columns by edges in graph order.
IntegerMatrix boundary_matrix(const OrientedGraph& g);

std::size_t connected_components(const OrientedGraph& g);

/// Some gamma with d(gamma) = c supported on a spanning forest, or nothing
/// when c has nonzero total on a connected component.
std::optional<Chain1> boundary_preimage(const OrientedGraph& g, const Chain0& c);

/// Solution of d(gamma) = c on the integer line.
struct ZBoundarySolution {
  bool bounded = false;
  /// Uniformly finite witness when bounded.
  std::optional<BandedZChain> gamma;
  /// gamma_{i+1} - gamma_i for i far right, gamma_i - gamma_{i-1} for i far left.
  Integer slope_right = 0;
  Integer slope_left = 0;
  /// Normalization: gamma vanishes on the edge [window_start - 1, window_start],
  /// i.e. gamma_i = -(c_ws + ... + c_i) to the right of the window start.
  Integer anchor_index = 0;
  BandedZChain source;

  /// Value of the normalized solution on the edge [i, i+1]; defined in the
  /// unbounded case too (it grows linearly in the tails).
  Integer value_at(Integer i) const;
};

ZBoundarySolution solve_boundary_on_z(const BandedZChain& c);

/// Uniformly finite homology class invariant of a banded 0-chain on Z.
struct ZUfClass {
  Integer tail_left = 0;
  Integer tail_right = 0;
  bool is_trivial() const { return tail_left == 0 && tail_right == 0; }
  auto operator<=>(const ZUfClass&) const = default;
};

ZUfClass uf_class_on_z(const BandedZChain& c);

}  // namespace coarsek
