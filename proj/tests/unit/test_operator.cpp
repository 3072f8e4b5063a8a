#include "doctest.h"

#include "coarsek/operator.hpp"
#include "coarsek/oracles.hpp"

using namespace coarsek;

namespace {

BasisPtr line_basis(Integer lo, Integer hi, Integer slots) {
  std::vector<VertexId> vs;
  for (Integer x = lo; x <= hi; ++x) vs.push_back({x});
  std::vector<SlotId> ss;
  for (Integer i = 1; i <= slots; ++i) ss.push_back(SlotId::ordinal(i));
  return Basis::product(vs, ss);
}

}  // namespace

TEST_CASE("slot ids print and parse") {
  CHECK(SlotId::ordinal(3).to_string() == "O3");
  CHECK(SlotId::copy_edge(EdgeId{-2}, 1).to_string() == "E-2.1");
  CHECK(SlotId::parse("E-2.1") == SlotId::copy_edge(EdgeId{-2}, 1));
  CHECK(SlotId::parse("O7") == SlotId::ordinal(7));
  CHECK_THROWS_AS(SlotId::parse("X1"), InputError);
  CHECK_THROWS_AS(SlotId::parse("E3"), InputError);
  CHECK(SlotId::copy_edge(EdgeId{1}, 1) != SlotId::ordinal(1));
}

TEST_CASE("bases are sorted and searchable") {
  const BasisPtr b = line_basis(-1, 1, 2);
  CHECK(b->size() == 6);
  CHECK(b->min_vertex() == VertexId{-1});
  CHECK(b->max_vertex() == VertexId{1});
  CHECK(b->find({{0}, SlotId::ordinal(2)}) == 3u);
  CHECK_FALSE(b->contains({{5}, SlotId::ordinal(1)}));
  CHECK(b->vertices().size() == 3);
  const BasisPtr m = Basis::merge(*line_basis(0, 0, 1), *line_basis(3, 3, 1));
  CHECK(m->size() == 2);
}

TEST_CASE("entries are summed, zeros discarded, and out-of-basis entries rejected") {
  const BasisPtr b = line_basis(0, 1, 1);
  const auto a = SparseBlockOperator::from_indexed(b, {{0, 1, 2}, {0, 1, 3}, {1, 0, 4}, {1, 0, -4}});
  CHECK(a.nnz() == 1);
  CHECK(a.at(0, 1) == 5);
  CHECK_THROWS_AS(SparseBlockOperator::from_indexed(b, {{0, 2, 1}}), PreconditionError);
  CHECK_THROWS_AS(
      SparseBlockOperator::from_entries(b, {{{{0}, SlotId::ordinal(1)}, {{9}, SlotId::ordinal(1)}, 1}}),
      PreconditionError);
}

TEST_CASE("composition and adjoint of small matrices") {
  const BasisPtr b = line_basis(0, 1, 1);
  const auto a = SparseBlockOperator::from_indexed(b, {{0, 0, 1}, {0, 1, 2}, {1, 1, 3}});
  const auto c = SparseBlockOperator::from_indexed(b, {{0, 0, 4}, {1, 0, 5}});
  const auto ac = compose(a, c);
  CHECK(ac.at(0, 0) == 14);
  CHECK(ac.at(1, 0) == 15);
  CHECK(ac.at(0, 1) == 0);
  CHECK(adjoint(a).at(1, 0) == 2);
  CHECK(adjoint(adjoint(a)) == a);
  CHECK(subtract(a, a).is_zero());
  CHECK(add(a, c).at(0, 0) == 5);
  CHECK(minus_identity(SparseBlockOperator::identity(b)).is_zero());
  CHECK_THROWS_AS(compose(a, SparseBlockOperator::identity(line_basis(0, 2, 1))), BasisMismatch);
}

TEST_CASE("embedding and restriction") {
  const BasisPtr small = line_basis(0, 0, 1);
  const BasisPtr big = line_basis(0, 1, 1);
  const auto two = SparseBlockOperator::from_indexed(small, {{0, 0, 2}});
  const auto z = embed(two, big, Extension::Zero);
  const auto i = embed(two, big, Extension::Identity);
  CHECK(z.nnz() == 1);
  CHECK(i.at(1, 1) == 1);
  CHECK(restrict_to(i, small) == two);
  CHECK_THROWS_AS(embed(i, small, Extension::Zero), BasisMismatch);
}

TEST_CASE("propagation and block ranks") {
  const BasisPtr b = line_basis(0, 3, 2);
  const auto a = SparseBlockOperator::from_entries(b, {{{{0}, SlotId::ordinal(1)}, {{3}, SlotId::ordinal(1)}, 1},
                                                       {{{0}, SlotId::ordinal(2)}, {{3}, SlotId::ordinal(2)}, 1},
                                                       {{{1}, SlotId::ordinal(1)}, {{1}, SlotId::ordinal(2)}, 7}});
  CHECK(propagation(a, LineMetric{}) == 3);
  CHECK(block_rank(a, {0}, {3}) == 2);
  CHECK(block_rank(a, {1}, {1}) == 1);
  CHECK(block_rank(a, {2}, {2}) == 0);
  CHECK(max_block_rank(a) == 2);
  CHECK(block_ranks(a).size() == 2);
  CHECK_FALSE(is_permutation(a));
  CHECK(is_permutation(SparseBlockOperator::identity(b)));
  CHECK(is_diagonal(SparseBlockOperator::identity(b)));
  CHECK(is_projection(SparseBlockOperator::diagonal_projection(b, [](const BlockIndex& x) { return x.vertex.value > 1; })));
  CHECK_FALSE(is_projection(add(SparseBlockOperator::identity(b), SparseBlockOperator::identity(b))));
}

TEST_CASE("dump round-trips") {
  const BasisPtr b = line_basis(-1, 1, 2);
  const auto a = SparseBlockOperator::from_indexed(b, {{0, 5, -3}, {4, 1, 2}, {2, 2, 1}});
  const std::string text = dump(a);
  CHECK(parse_dump(b, text) == a);
  CHECK_THROWS_AS(parse_dump(b, "garbage\n"), InputError);
}

TEST_CASE("the forward shift has index -1") {
  const Window w = Window::centered(16, 4);
  const auto s = forward_shift(w);
  CHECK(is_unitary_on(s, w));
  CHECK_FALSE(is_unitary(s));
  CHECK(index_pairing(s, w) == -1);
  CHECK(index_pairing(adjoint(s), w) == 1);
  CHECK(oracle::trace_index(s, w) == -1);
  const auto details = index_pairing_details(compose(s, s), w);
  CHECK(details.index == -2);
  CHECK(details.propagation == 2);
  CHECK(details.far_trace == 0);
  CHECK(index_pairing(SparseBlockOperator::identity(s.basis()), w) == 0);
}

TEST_CASE("index pairing preconditions") {
  const auto s = forward_shift(Window::centered(8, 4));
  CHECK_THROWS_AS(index_pairing(s, Window::centered(8, 0)), MarginError);
  CHECK_THROWS_AS(index_pairing(s, Window::centered(8, 8)), MarginError);
  CHECK_THROWS_AS(index_pairing(s, Window{VertexId{1}, VertexId{8}, 2}), MarginError);
  const BasisPtr b = s.basis();
  const auto doubled = add(SparseBlockOperator::identity(b), SparseBlockOperator::identity(b));
  CHECK_THROWS_AS(index_pairing(doubled, Window::centered(8, 4)), PreconditionError);
}
