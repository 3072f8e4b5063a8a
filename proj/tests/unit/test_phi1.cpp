#include "doctest.h"

#include "coarsek/chains.hpp"
#include "coarsek/generators.hpp"
#include "coarsek/oracles.hpp"
#include "coarsek/phi1.hpp"

using namespace coarsek;

namespace {

OrientedGraph triangle() {
  return OrientedGraph({{0}, {1}, {2}}, {{{0}, {1}, "a", {}}, {{1}, {2}, "b", {}}, {{2}, {0}, "c", {}}});
}

// Two directed triangles sharing vertex 0.
OrientedGraph figure_eight() {
  return OrientedGraph({{0}, {1}, {2}, {3}, {4}}, {{{0}, {1}, {}, {}},
                                                   {{1}, {2}, {}, {}},
                                                   {{2}, {0}, {}, {}},
                                                   {{0}, {3}, {}, {}},
                                                   {{3}, {4}, {}, {}},
                                                   {{4}, {0}, {}, {}}});
}

Chain1 ones(const OrientedGraph& g) {
  Chain1 c;
  for (const Edge& e : g.edges()) c.add(e.id, 1);
  return c;
}

SlotId slot(Integer e) { return SlotId::copy_edge(EdgeId{e}, 1); }

// Orbit lengths > 1 of a permutation matrix, computed from its entries.
std::vector<std::size_t> orbit_lengths(const SparseBlockOperator& u) {
  const std::size_t n = u.basis()->size();
  std::vector<std::size_t> image(n);
  u.for_each([&](std::size_t r, std::size_t c, Integer) { image[c] = r; });
  std::vector<bool> seen(n);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = image[j]) {
      seen[j] = true;
      ++len;
    }
    if (len > 1) out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("the triangle cycle is a single 3-cycle") {
  const CycleUnitary cu = build_cycle_unitary(triangle(), ones(triangle()));
  CHECK(cu.u.basis()->size() == 9);
  CHECK(is_unitary(cu.u));
  CHECK(oracle::is_permutation_matrix(cu.u));
  CHECK(orbit_lengths(cu.u) == std::vector<std::size_t>{3});
  // (1, a) enters 1 and continues along b to 2.
  CHECK(cu.u.at({{2}, slot(1)}, {{1}, slot(0)}) == 1);
  CHECK(cu.u.at({{0}, slot(1)}, {{0}, slot(1)}) == 1);
  const UnitaryCertificate cert = certify_cycle_unitary(cu);
  CHECK(cert.all_passed());
  CHECK(cert.propagation == 1);
}

TEST_CASE("negative coefficients reverse travel") {
  Chain1 c = ones(triangle());
  c = -c;
  const CycleUnitary cu = build_cycle_unitary(triangle(), c);
  CHECK(cu.u.at({{0}, slot(0)}, {{1}, slot(1)}) == 1);
  CHECK(certify_cycle_unitary(cu).all_passed());
}

TEST_CASE("the zero cycle gives the identity on a padded basis") {
  const CycleUnitary cu = build_cycle_unitary(triangle(), Chain1{});
  CHECK(cu.u.basis()->size() == 3);
  CHECK(cu.u == SparseBlockOperator::identity(cu.u.basis()));
}

TEST_CASE("non-cycles are reported with the first unbalanced vertex") {
  Chain1 c;
  c.add(EdgeId{1}, 1);
  try {
    (void)build_cycle_unitary(triangle(), c);
    FAIL("expected NotACycleError");
  } catch (const NotACycleError& e) {
    CHECK(e.vertex == VertexId{1});
  }
  CHECK_THROWS_AS(canonical_alpha(expand_graph(triangle(), c)), PreconditionError);
  const BijectionFamily partial = canonical_alpha_where_balanced(expand_graph(triangle(), c));
  CHECK_FALSE(partial.next[0].has_value());
}

TEST_CASE("figure eight: two matchings give different cycle types") {
  const OrientedGraph g = figure_eight();
  const ExpandedGraph G = expand_graph(g, ones(g));
  const BijectionFamily alpha = canonical_alpha(G);
  const BijectionFamily beta = alpha_with_overrides(G, {{VertexId{0}, {{slot(2), slot(3)}, {slot(5), slot(0)}}}});
  CHECK(is_valid(G, beta));
  CHECK(alpha != beta);
  const CycleUnitary ua = build_cycle_unitary(g, ones(g), alpha);
  const CycleUnitary ub = build_cycle_unitary(g, ones(g), beta);
  CHECK(orbit_lengths(ua.u) == std::vector<std::size_t>{3, 3});
  CHECK(orbit_lengths(ub.u) == std::vector<std::size_t>{6});
  CHECK(certify_cycle_unitary(ub).all_passed());

  const AlphaIndependenceReport r = verify_alpha_independence(g, ones(g), alpha, beta);
  CHECK(r.cycle_type_alpha == std::vector<std::size_t>{3, 3});
  CHECK(r.cycle_type_beta == std::vector<std::size_t>{6});
  CHECK_FALSE(r.w.has_value());
  CHECK_FALSE(r.literal_identities_hold());
  CHECK(r.factorization_exact);
  CHECK(r.r_is_local);
  CHECK(r.classes_equal());
  CHECK(compose(r.r, r.u_alpha) == r.u_beta);
  CHECK(r.r_max_part == 2);
}

TEST_CASE("invalid overrides are rejected") {
  const OrientedGraph g = figure_eight();
  const ExpandedGraph G = expand_graph(g, ones(g));
  CHECK_THROWS_AS(alpha_with_overrides(G, {{VertexId{0}, {{slot(2), slot(3)}, {slot(5), slot(3)}}}}), InputError);
  CHECK_THROWS_AS(alpha_with_overrides(G, {{VertexId{0}, {{slot(0), slot(3)}}}}), InputError);
  CHECK_THROWS_AS(alpha_with_overrides(G, {{VertexId{0}, {{SlotId::copy_edge(EdgeId{2}, 9), slot(3)}}}}), InputError);
}

TEST_CASE("random cycles give certified permutation unitaries") {
  Rng rng(5);
  for (int t = 0; t < 80; ++t) {
    const OrientedGraph g = random_connected_graph(rng, 3 + t % 5, 1 + t % 4);
    const Chain1 gamma = random_cycle(rng, g);
    const ExpandedGraph G = expand_graph(g, gamma);
    const CycleUnitary cu = build_cycle_unitary(g, gamma, random_alpha(G, rng));
    CHECK(oracle::is_permutation_matrix(cu.u));
    CHECK(certify_cycle_unitary(cu).all_passed());
  }
}

TEST_CASE("constant chains on the line") {
  const Window w = Window::centered(16, 4);
  for (Integer k = -3; k <= 3; ++k) {
    CHECK(phi1_on_z(k, w) == -k);
    const CycleUnitary cu = z_line_cycle_unitary(k, w);
    CHECK(is_unitary_on(cu.u, w));
    CHECK(oracle::trace_index(cu.u, w) == -k);
  }
  CHECK(phi1_on_z(2, Window::centered(32, 4)) == -2);
  const CycleUnitary one = z_line_cycle_unitary(1, w);
  CHECK(one.u.at({{1}, SlotId::copy_edge(EdgeId{0}, 1)}, {{0}, SlotId::copy_edge(EdgeId{-1}, 1)}) == 1);
}

TEST_CASE("line matchings do not change the index") {
  const Window w = Window::centered(12, 4);
  const LineMatching swap = [](VertexId x) {
    return x.value % 2 == 0 ? std::vector<std::size_t>{1, 0} : std::vector<std::size_t>{0, 1};
  };
  CHECK(index_pairing(z_line_cycle_unitary(2, w, swap).u, w) == -2);
  const LineMatching bad = [](VertexId) { return std::vector<std::size_t>{0, 0}; };
  CHECK_THROWS_AS(z_line_cycle_unitary(2, w, bad), PreconditionError);
}

TEST_CASE("compression of the triangle cycle") {
  const CycleUnitary cu = build_cycle_unitary(triangle(), ones(triangle()));
  const Compression c = compress_to_uniform(cu, EdgeNumbering::canonical(cu.expanded), 2);
  CHECK(c.all_passed());
  CHECK(c.slots == 2);
  CHECK(compose(adjoint(c.t), compose(c.u_extended, c.t)) == c.u_tilde);
  CHECK(orbit_lengths(c.u_tilde) == std::vector<std::size_t>{3});
  CHECK_THROWS_AS(compress_to_uniform(cu, EdgeNumbering::canonical(cu.expanded), 1), PreconditionError);
}

TEST_CASE("compression on the line keeps the index") {
  const Window w = Window::centered(16, 4);
  for (Integer k : {-2, 1, 2}) {
    const CycleUnitary cu = z_line_cycle_unitary(k, w);
    const Integer n = 2 * std::abs(k);
    const Compression c = compress_to_uniform(cu, EdgeNumbering::canonical(cu.expanded), n, &w);
    CHECK(c.all_passed());
    CHECK(index_pairing(c.u_tilde, w) == -k);
  }
}
