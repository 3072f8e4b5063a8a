#include "doctest.h"

#include "coarsek/chains.hpp"
#include "coarsek/generators.hpp"
#include "coarsek/phi0.hpp"

using namespace coarsek;

namespace {

OrientedGraph triangle() {
  return OrientedGraph({{0}, {1}, {2}}, {{{0}, {1}, "a", {}}, {{1}, {2}, "b", {}}, {{2}, {0}, "c", {}}});
}

std::size_t rank_at(const SparseBlockOperator& p, VertexId x) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < p.basis()->size(); ++i)
    if ((*p.basis())[i].vertex == x && p.at(i, i) == 1) ++n;
  return n;
}

}  // namespace

TEST_CASE("projection pair of c = 2a - b") {
  const OrientedGraph g({{0}, {1}}, {{{0}, {1}, {}, {}}});
  Chain0 c;
  c.add(VertexId{0}, 2);
  c.add(VertexId{1}, -1);
  const ProjectionPair p = build_projection_pair(g, c);
  CHECK(is_projection(p.f));
  CHECK(is_projection(p.g));
  CHECK(is_diagonal(p.f));
  CHECK(rank_at(p.f, {0}) == 2);
  CHECK(rank_at(p.f, {1}) == 0);
  CHECK(rank_at(p.g, {0}) == 0);
  CHECK(rank_at(p.g, {1}) == 1);
  CHECK(p.f.at({{0}, SlotId::ordinal(2)}, {{0}, SlotId::ordinal(2)}) == 1);
  CHECK(k0_signature(p) == 1);
}

TEST_CASE("the zero chain gives the zero pair") {
  const ProjectionPair p = build_projection_pair(triangle(), Chain0{});
  CHECK(p.f.is_zero());
  CHECK(p.g.is_zero());
  CHECK(k0_signature(p) == 0);
}

TEST_CASE("explicit bases must hold enough ordinal slots") {
  const BasisPtr b = Basis::product({{0}}, {SlotId::ordinal(1)});
  Chain0 c;
  c.add(VertexId{0}, 2);
  CHECK_THROWS_AS(build_projection_pair(b, c), PreconditionError);
  Chain0 outside;
  outside.add(VertexId{7}, 1);
  CHECK_THROWS_AS(build_projection_pair(triangle(), outside), PreconditionError);
}

TEST_CASE("banded pairs are the window restriction") {
  const Window w = Window::centered(3, 1);
  const ProjectionPair p = build_projection_pair(BandedZChain::constant(0, 1), w);
  CHECK(rank_at(p.f, {-4}) == 1);
  CHECK(rank_at(p.f, {4}) == 1);
  CHECK(k0_signature(p) == 9);
  CHECK(k0_signature(build_projection_pair(BandedZChain::finite(0, 0, {2, -3}), w)) == -1);
}

TEST_CASE("per-vertex equivalence needs equal ranks at each vertex") {
  const BasisPtr b = Basis::product({{0}, {1}}, {SlotId::ordinal(1), SlotId::ordinal(2)});
  const auto p = SparseBlockOperator::diagonal_projection(b, [](const BlockIndex& x) { return x.slot == SlotId::ordinal(1); });
  const auto q = SparseBlockOperator::diagonal_projection(b, [](const BlockIndex& x) { return x.slot == SlotId::ordinal(2); });
  const auto s = per_vertex_equivalence(p, q);
  REQUIRE(s.has_value());
  CHECK(compose(*s, compose(p, adjoint(*s))) == q);
  CHECK(is_permutation(*s));
  const auto r = SparseBlockOperator::diagonal_projection(b, [](const BlockIndex& x) { return x.vertex.value == 0; });
  CHECK_FALSE(per_vertex_equivalence(p, r).has_value());
}

TEST_CASE("boundary witness of a single edge") {
  const OrientedGraph g({{0}, {1}}, {{{0}, {1}, {}, {}}});
  Chain1 gamma;
  gamma.add(EdgeId{0}, 1);
  const BoundaryWitness w = boundary_witness(g, gamma);
  CHECK(w.all_passed());
  CHECK(w.v.nnz() == 1);
  CHECK(w.v.at({{1}, SlotId::copy_edge(EdgeId{0}, 1)}, {{0}, SlotId::copy_edge(EdgeId{0}, 1)}) == 1);
  CHECK(w.propagation == 1);
  REQUIRE(w.ranks.size() == 2);
  CHECK(w.ranks[0].outflow == 1);
  CHECK(w.ranks[0].rank_vstar_v == 1);
  CHECK(w.ranks[0].coefficient == -1);
  CHECK(w.ranks[1].inflow == 1);
  CHECK(w.ranks[1].rank_v_vstar == 1);
  CHECK(k0_signature(w.pair) == 0);
}

TEST_CASE("boundary witness with multiplicities and signs") {
  Chain1 gamma;
  gamma.add(EdgeId{0}, 2);
  gamma.add(EdgeId{1}, -3);
  const BoundaryWitness w = boundary_witness(triangle(), gamma);
  CHECK(w.all_passed());
  CHECK(w.expanded.edge_count() == 5);
  CHECK(w.pair.chain == boundary(triangle(), gamma));
  for (const VertexRanks& r : w.ranks) CHECK(r.inflow - r.outflow == r.coefficient);
}

TEST_CASE("witnesses of random chains") {
  Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    const OrientedGraph g = random_connected_graph(rng, 2 + t % 5, t % 3);
    const Chain1 gamma = random_chain1(rng, g);
    const BoundaryWitness w = boundary_witness(g, gamma);
    CHECK(w.all_passed());
    CHECK(k0_signature(w.pair) == 0);
  }
}
