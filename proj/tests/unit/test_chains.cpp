#include "doctest.h"

#include "coarsek/chains.hpp"
#include "coarsek/generators.hpp"

using namespace coarsek;

namespace {

OrientedGraph triangle() {
  return OrientedGraph({{0}, {1}, {2}}, {{{0}, {1}, "a", {}}, {{1}, {2}, "b", {}}, {{2}, {0}, "c", {}}});
}

Chain1 chain1(std::initializer_list<std::pair<Integer, Integer>> xs) {
  Chain1 c;
  for (auto [e, v] : xs) c.add(EdgeId{e}, v);
  return c;
}

Chain0 chain0(std::initializer_list<std::pair<Integer, Integer>> xs) {
  Chain0 c;
  for (auto [v, x] : xs) c.add(VertexId{v}, x);
  return c;
}

}  // namespace

TEST_CASE("chains drop zero coefficients") {
  Chain0 c = chain0({{1, 2}, {1, -2}, {3, 1}});
  CHECK(c.coeffs.size() == 1);
  CHECK(c.at(VertexId{3}) == 1);
  CHECK(c.at(VertexId{9}) == 0);
  CHECK((c + (-c)).is_zero());
  CHECK(uniform_bound(chain1({{0, -4}, {1, 2}})).bound == 5);
  CHECK(uniform_bound(Chain0{}).bound == 1);
}

TEST_CASE("boundary of single edges and of the triangle cycle") {
  const OrientedGraph g = triangle();
  CHECK(boundary(g, chain1({{0, 1}})) == chain0({{1, 1}, {0, -1}}));
  CHECK(boundary(g, chain1({{0, 2}, {1, 1}})) == chain0({{0, -2}, {1, 1}, {2, 1}}));
  const Chain1 loop = chain1({{0, 1}, {1, 1}, {2, 1}});
  CHECK(boundary(g, loop).is_zero());
  CHECK(is_cycle(g, loop));
  CHECK_FALSE(is_cycle(g, chain1({{0, 1}})));
  CHECK(cycle_violation(g, chain1({{0, 1}})) == VertexId{0});
}

TEST_CASE("flow balance counts signed coefficients as given") {
  const OrientedGraph g = triangle();
  const FlowBalance f = flow_balance(g, chain1({{0, 3}, {2, -1}}));
  CHECK(f.outflow.at(VertexId{0}) == 3);
  CHECK(f.inflow.at(VertexId{0}) == -1);
}

TEST_CASE("homology of small graphs") {
  const FiniteHomology t = homology_finite(triangle());
  CHECK(t.h0.to_string() == "Z");
  CHECK(t.h1_rank == 1);
  CHECK(t.components == 1);
  REQUIRE(t.h1_basis.size() == 1);
  CHECK(is_cycle(triangle(), t.h1_basis[0]));

  const OrientedGraph g({{0}, {1}, {2}, {3}, {4}},
                        {{{0}, {1}, {}, {}},
                         {{1}, {2}, {}, {}},
                         {{2}, {3}, {}, {}},
                         {{3}, {4}, {}, {}},
                         {{4}, {0}, {}, {}},
                         {{0}, {2}, {}, {}},
                         {{1}, {3}, {}, {}}});
  const FiniteHomology h = homology_finite(g);
  CHECK(h.h0.to_string() == "Z");
  CHECK(h.h1_rank == 3);
  for (const Chain1& z : h.h1_basis) CHECK(is_cycle(g, z));

  const OrientedGraph disjoint({{0}, {1}, {2}}, {{{0}, {1}, {}, {}}});
  CHECK(homology_finite(disjoint).h0.to_string() == "Z^2");
  CHECK(homology_finite(disjoint).h1_rank == 0);
  CHECK(connected_components(disjoint) == 2);

  const OrientedGraph loop({{0}}, {{{0}, {0}, {}, {}}});
  CHECK(homology_finite(loop).h1_rank == 1);
  CHECK(homology_finite(OrientedGraph({{0}, {1}}, {})).h0.to_string() == "Z^2");
}

TEST_CASE("boundary matrix columns hold t(e) - s(e)") {
  const IntegerMatrix d = boundary_matrix(triangle());
  CHECK(d(0, 0) == -1);
  CHECK(d(1, 0) == 1);
  CHECK(d(2, 0) == 0);
  CHECK(d(0, 2) == 1);
}

TEST_CASE("boundary preimages exist exactly on zero-total components") {
  const OrientedGraph g = triangle();
  const Chain0 c = chain0({{0, 2}, {2, -2}});
  const auto gamma = boundary_preimage(g, c);
  REQUIRE(gamma.has_value());
  CHECK(boundary(g, *gamma) == c);
  CHECK_FALSE(boundary_preimage(g, chain0({{0, 1}})).has_value());

  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const OrientedGraph h = random_connected_graph(rng, 2 + t % 6, t % 4);
    const Chain0 target = boundary(h, random_chain1(rng, h));
    const auto pre = boundary_preimage(h, target);
    REQUIRE(pre.has_value());
    CHECK(boundary(h, *pre) == target);
  }
}

TEST_CASE("banded chains on the integer line") {
  const BandedZChain c{0, 2, -1, 3, {5, 6}};
  CHECK(c.at(-100) == 2);
  CHECK(c.at(3) == 5);
  CHECK(c.at(4) == 6);
  CHECK(c.at(5) == -1);
  CHECK(c.window_end() == 5);
  CHECK(same_sequence(BandedZChain{0, 1, 1, 0, {1, 1}}, BandedZChain::constant(0, 1)));
  CHECK_FALSE(same_sequence(BandedZChain::constant(0, 1), BandedZChain::constant(1, 1)));
  CHECK(uniform_bound(c).bound == 7);
}

TEST_CASE("boundary on the line is gamma_{i-1} - gamma_i") {
  const BandedZChain edge = BandedZChain::finite(1, 0, {1});
  CHECK(same_sequence(boundary(edge), BandedZChain::finite(0, 0, {-1, 1})));
  CHECK(is_cycle(BandedZChain::constant(1, 3)));
  CHECK_FALSE(is_cycle(edge));
  const BandedZChain step{1, 0, 1, 0, {}};
  CHECK(same_sequence(boundary(step), BandedZChain::finite(0, 0, {-1})));
}

TEST_CASE("solving d gamma = c on the line") {
  const ZBoundarySolution s = solve_boundary_on_z(BandedZChain::finite(0, 0, {1}));
  CHECK(s.bounded);
  REQUIRE(s.gamma.has_value());
  CHECK(same_sequence(boundary(*s.gamma), s.source));
  CHECK(s.gamma->at(-1) == 0);
  CHECK(s.gamma->at(0) == -1);
  CHECK(s.gamma->at(50) == -1);
  CHECK(s.value_at(7) == -1);

  const ZBoundarySolution dipole = solve_boundary_on_z(BandedZChain::finite(0, -2, {1, 0, -1}));
  REQUIRE(dipole.gamma.has_value());
  CHECK(dipole.gamma->has_finite_support());
  CHECK(dipole.value_at(-2) == -1);
  CHECK(dipole.value_at(-1) == -1);
  CHECK(dipole.value_at(0) == 0);

  const ZBoundarySolution one = solve_boundary_on_z(BandedZChain::constant(0, 1));
  CHECK_FALSE(one.bounded);
  CHECK(one.slope_left == -1);
  CHECK(one.slope_right == -1);
  CHECK(one.value_at(one.anchor_index + 5) == -5);
  CHECK(one.value_at(one.anchor_index - 5) == 5);

  const ZBoundarySolution step = solve_boundary_on_z(BandedZChain{0, 0, 1, 0, {}});
  CHECK_FALSE(step.bounded);
  CHECK(step.slope_left == 0);
  CHECK(step.slope_right == -1);
  CHECK_THROWS_AS(solve_boundary_on_z(BandedZChain::constant(1, 1)), PreconditionError);
}

TEST_CASE("uniformly finite classes on the line") {
  CHECK(uf_class_on_z(BandedZChain::finite(0, 3, {2, -1})).is_trivial());
  CHECK(uf_class_on_z(BandedZChain::constant(0, 1)) == ZUfClass{1, 1});
  CHECK(uf_class_on_z(BandedZChain{0, 0, 1, 0, {}}) == ZUfClass{0, 1});
  CHECK(uf_class_on_z(BandedZChain::constant(0, 1)) != uf_class_on_z(BandedZChain{0, 0, 1, 0, {}}));
}
