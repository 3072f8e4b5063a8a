#include "coarsek/phi0.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace coarsek {

namespace {

std::vector<SlotId> ordinal_slots(Integer count) {
  std::vector<SlotId> out;
  for (Integer i = 1; i <= count; ++i) out.push_back(SlotId::ordinal(i));
  return out;
}

Integer max_abs(const Chain0& c) {
  Integer m = 0;
  for (const auto& [v, x] : c.coeffs) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

ProjectionPair build_projection_pair(BasisPtr basis, const Chain0& c) {
  for (const auto& [v, x] : c.coeffs)
    for (Integer i = 1; i <= std::abs(x); ++i)
      if (!basis->contains(BlockIndex{v, SlotId::ordinal(i)}))
        throw PreconditionError("build_projection_pair: basis lacks slot O" + std::to_string(i) + " at vertex " +
                                std::to_string(v.value));
  auto f = SparseBlockOperator::diagonal_projection(basis, [&](const BlockIndex& b) {
    return b.slot.is_ordinal() && b.slot.major <= c.at(b.vertex);
  });
  auto g = SparseBlockOperator::diagonal_projection(basis, [&](const BlockIndex& b) {
    return b.slot.is_ordinal() && b.slot.major <= -c.at(b.vertex);
  });
  return ProjectionPair{std::move(f), std::move(g), c};
}

ProjectionPair build_projection_pair(const OrientedGraph& g, const Chain0& c) {
  for (const auto& [v, x] : c.coeffs)
    if (!g.has_vertex(v)) throw PreconditionError("build_projection_pair: chain uses a vertex outside the graph");
  return build_projection_pair(Basis::product(g.vertices(), ordinal_slots(max_abs(c))), c);
}

ProjectionPair build_projection_pair(const BandedZChain& c, const Window& w) {
  if (c.degree != 0) throw PreconditionError("build_projection_pair: expected a degree-0 banded chain");
  Chain0 finite;
  std::vector<VertexId> vertices;
  for (Integer x = w.outer_first().value; x <= w.outer_last().value; ++x) {
    vertices.push_back(VertexId{x});
    finite.add(VertexId{x}, c.at(x));
  }
  return build_projection_pair(Basis::product(vertices, ordinal_slots(max_abs(finite))), finite);
}

Integer k0_signature(const ProjectionPair& p) {
  Integer sig = 0;
  for (VertexId x : p.f.basis()->vertices()) {
    sig = checked_add(sig, static_cast<Integer>(block_rank(p.f, x, x)));
    sig = checked_sub(sig, static_cast<Integer>(block_rank(p.g, x, x)));
  }
  return sig;
}

std::optional<SparseBlockOperator> per_vertex_equivalence(const SparseBlockOperator& p,
                                                          const SparseBlockOperator& q) {
  if (!(*p.basis() == *q.basis())) throw BasisMismatch("per_vertex_equivalence: different bases");
  if (!is_diagonal(p) || !is_diagonal(q) || !is_projection(p) || !is_projection(q)) return std::nullopt;
  const Basis& basis = *p.basis();
  struct Split {
    std::vector<std::size_t> p_in, p_out, q_in, q_out;
  };
  std::map<VertexId, Split> split;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Split& s = split[basis[i].vertex];
    (p.at(i, i) ? s.p_in : s.p_out).push_back(i);
    (q.at(i, i) ? s.q_in : s.q_out).push_back(i);
  }
  std::vector<std::tuple<std::size_t, std::size_t, Integer>> t;
  for (const auto& [v, s] : split) {
    if (s.p_in.size() != s.q_in.size()) return std::nullopt;
    for (std::size_t k = 0; k < s.p_in.size(); ++k) t.emplace_back(s.q_in[k], s.p_in[k], 1);
    for (std::size_t k = 0; k < s.p_out.size(); ++k) t.emplace_back(s.q_out[k], s.p_out[k], 1);
  }
  return SparseBlockOperator::from_indexed(p.basis(), std::move(t));
}

namespace {

bool conjugates_to(const SparseBlockOperator& s, const SparseBlockOperator& p, const SparseBlockOperator& q) {
  return compose(s, compose(p, adjoint(s))) == q;
}

}  // namespace

BoundaryWitness boundary_witness(const OrientedGraph& g, const Chain1& gamma) {
  BoundaryWitness w;
  w.expanded = expand_graph(g, gamma);
  const ExpandedGraph& G = w.expanded;
  const Chain0 c = boundary(g, gamma);

  std::vector<SlotId> slots = G.slots();
  for (const SlotId& s : ordinal_slots(G.max_flow())) slots.push_back(s);
  w.basis = Basis::product(g.vertices(), slots);

  std::vector<OperatorEntry> v_entries;
  for (const ExpandedEdge& e : G.edges())
    v_entries.push_back({BlockIndex{e.target, e.slot()}, BlockIndex{e.source, e.slot()}, 1});
  w.v = SparseBlockOperator::from_entries(w.basis, v_entries);

  auto slot_edge = [&](const BlockIndex& b) -> const ExpandedEdge* {
    if (b.slot.is_ordinal()) return nullptr;
    auto i = G.find(b.slot);
    return i ? &G.edge(*i) : nullptr;
  };
  w.proj_a = SparseBlockOperator::diagonal_projection(w.basis, [&](const BlockIndex& b) {
    const ExpandedEdge* e = slot_edge(b);
    return e && e->source == b.vertex;
  });
  w.proj_b = SparseBlockOperator::diagonal_projection(w.basis, [&](const BlockIndex& b) {
    const ExpandedEdge* e = slot_edge(b);
    return e && e->target == b.vertex;
  });
  w.f_prime = SparseBlockOperator::diagonal_projection(
      w.basis, [&](const BlockIndex& b) { return b.slot.is_ordinal() && b.slot.major <= G.inflow(b.vertex); });
  w.g_prime = SparseBlockOperator::diagonal_projection(
      w.basis, [&](const BlockIndex& b) { return b.slot.is_ordinal() && b.slot.major <= G.outflow(b.vertex); });
  w.pair = build_projection_pair(w.basis, c);

  const SparseBlockOperator vstar_v = compose(adjoint(w.v), w.v);
  const SparseBlockOperator v_vstar = compose(w.v, adjoint(w.v));
  w.vstar_v_is_proj_a = vstar_v == w.proj_a;
  w.v_vstar_is_proj_b = v_vstar == w.proj_b;

  w.ranks_match_flow = true;
  w.flow_matches_chain = true;
  for (VertexId x : g.vertices()) {
    VertexRanks r{x, G.inflow(x), G.outflow(x), c.at(x), block_rank(vstar_v, x, x), block_rank(v_vstar, x, x)};
    const bool ranks_ok =
        r.rank_vstar_v == static_cast<std::size_t>(r.outflow) && r.rank_v_vstar == static_cast<std::size_t>(r.inflow);
    const bool flow_ok = r.inflow - r.outflow == r.coefficient;
    if ((!ranks_ok || !flow_ok) && !w.failing_vertex) w.failing_vertex = x;
    w.ranks_match_flow = w.ranks_match_flow && ranks_ok;
    w.flow_matches_chain = w.flow_matches_chain && flow_ok;
    w.ranks.push_back(r);
  }

  if (auto s = per_vertex_equivalence(v_vstar, w.f_prime)) w.f_prime_equivalent = conjugates_to(*s, v_vstar, w.f_prime);
  if (auto s = per_vertex_equivalence(vstar_v, w.g_prime)) w.g_prime_equivalent = conjugates_to(*s, vstar_v, w.g_prime);

  // f' = f_c + h_f and g' = g_c + h_g with h_f ~ h_g of rank min(i, o) at x.
  const SparseBlockOperator h_f = subtract(w.f_prime, w.pair.f);
  const SparseBlockOperator h_g = subtract(w.g_prime, w.pair.g);
  if (compose(w.f_prime, w.pair.f) == w.pair.f && compose(w.g_prime, w.pair.g) == w.pair.g && is_projection(h_f) &&
      is_projection(h_g)) {
    if (auto s = per_vertex_equivalence(h_f, h_g)) w.excess_equivalent = conjugates_to(*s, h_f, h_g);
  }

  w.propagation = propagation(w.v, graph_metric(G.as_graph()));
  return w;
}

}  // namespace coarsek
