#include "coarsek/phi1.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace coarsek {

NotACycleError::NotACycleError(VertexId v, Integer inflow, Integer outflow)
    : PreconditionError("not a cycle at vertex " + std::to_string(v.value) + ": inflow " + std::to_string(inflow) +
                        ", outflow " + std::to_string(outflow)),
      vertex(v) {}

namespace {

void match_in_order(const ExpandedGraph& g, VertexId x, BijectionFamily& a) {
  const auto& in = g.in(x);
  const auto& out = g.out(x);
  for (std::size_t j = 0; j < in.size(); ++j) a.next[in[j]] = out[j];
}

std::string locus(const BlockIndex& b) {
  return "vertex " + std::to_string(b.vertex.value) + " slot " + b.slot.to_string();
}

const ExpandedEdge* slot_edge(const ExpandedGraph& g, const SlotId& s) {
  if (s.is_ordinal()) return nullptr;
  auto i = g.find(s);
  return i ? &g.edge(*i) : nullptr;
}

// Operator sending column i to row image[i]; images outside the basis vanish.
SparseBlockOperator from_images(const BasisPtr& basis, const std::vector<std::optional<std::size_t>>& image) {
  std::vector<std::tuple<std::size_t, std::size_t, Integer>> t;
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i]) t.emplace_back(*image[i], i, 1);
  return SparseBlockOperator::from_indexed(basis, std::move(t));
}

bool row_considered(const Basis& basis, std::size_t r, const Window* w) {
  return !w || w->in_interior(basis[r].vertex);
}

// First basis row where a and b differ (interior rows only when w is given).
std::optional<std::size_t> first_difference(const SparseBlockOperator& a, const SparseBlockOperator& b,
                                            const Window* w) {
  const Basis& basis = *a.basis();
  for (std::size_t r = 0; r < basis.size(); ++r)
    if (row_considered(basis, r, w) && a.row(r) != b.row(r)) return r;
  return std::nullopt;
}

bool is_permutation_on(const SparseBlockOperator& a, const Window* w) {
  if (!w) return is_permutation(a);
  const Basis& basis = *a.basis();
  std::vector<int> col_hits(basis.size(), 0);
  bool ok = true;
  a.for_each([&](std::size_t r, std::size_t c, Integer v) {
    if (v != 1) ok = false;
    if (w->in_interior(basis[c].vertex)) ++col_hits[c];
    (void)r;
  });
  for (std::size_t i = 0; i < basis.size() && ok; ++i) {
    if (!w->in_interior(basis[i].vertex)) continue;
    if (a.row(i).size() != 1 || col_hits[i] != 1) ok = false;
  }
  return ok;
}

// Successor map of a permutation matrix: column c goes to succ[c].
std::vector<std::size_t> successors(const SparseBlockOperator& p) {
  std::vector<std::size_t> succ(p.basis()->size());
  p.for_each([&](std::size_t r, std::size_t c, Integer) { succ[c] = r; });
  return succ;
}

std::vector<std::vector<std::size_t>> orbits(const std::vector<std::size_t>& succ) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<char> seen(succ.size(), 0);
  for (std::size_t s = 0; s < succ.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t i = s; !seen[i]; i = succ[i]) {
      seen[i] = 1;
      orbit.push_back(i);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<std::size_t> cycle_type(const SparseBlockOperator& p) {
  std::vector<std::size_t> out;
  if (!is_permutation(p)) return out;
  for (const auto& o : orbits(successors(p)))
    if (o.size() > 1) out.push_back(o.size());
  std::sort(out.begin(), out.end());
  return out;
}

// W with W e_{b_i} = e_{a_i} along matched orbits, so that W u = target W.
std::optional<SparseBlockOperator> orbit_matching(const SparseBlockOperator& u, const SparseBlockOperator& target) {
  if (!is_permutation(u) || !is_permutation(target)) return std::nullopt;
  const Basis& basis = *u.basis();
  const auto su = successors(u);
  const auto st = successors(target);
  std::vector<std::optional<std::size_t>> image(basis.size());

  std::vector<std::vector<std::size_t>> rest_u, rest_t;
  std::vector<char> fixed(basis.size(), 0);
  for (const auto& o : orbits(su)) {
    bool same = std::all_of(o.begin(), o.end(), [&](std::size_t i) { return st[i] == su[i]; });
    if (same) {
      for (std::size_t i : o) {
        image[i] = i;
        fixed[i] = 1;
      }
    } else {
      rest_u.push_back(o);
    }
  }
  for (const auto& o : orbits(st))
    if (!fixed[o.front()]) rest_t.push_back(o);

  auto by_length = [](const auto& a, const auto& b) {
    return std::make_pair(a.size(), a.front()) < std::make_pair(b.size(), b.front());
  };
  std::sort(rest_u.begin(), rest_u.end(), by_length);
  std::sort(rest_t.begin(), rest_t.end(), by_length);
  if (rest_u.size() != rest_t.size()) return std::nullopt;
  for (std::size_t k = 0; k < rest_u.size(); ++k) {
    const auto& b = rest_u[k];
    const auto& a = rest_t[k];
    if (a.size() != b.size()) return std::nullopt;
    const std::size_t n = a.size();
    std::size_t best_shift = 0, best_hits = 0;
    for (std::size_t s = 0; s < n; ++s) {
      std::size_t hits = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (basis[a[(i + s) % n]].vertex == basis[b[i]].vertex) ++hits;
      if (hits > best_hits) {
        best_hits = hits;
        best_shift = s;
      }
    }
    for (std::size_t i = 0; i < n; ++i) image[b[i]] = a[(i + best_shift) % n];
  }
  return from_images(u.basis(), image);
}

// Block-diagonal W on a line window: pi_x permutes I(x), pi = id at the first
// vertex in the flow direction, and pi_{y}(beta e) = alpha(pi_x e).
std::optional<SparseBlockOperator> line_alignment(const ExpandedGraph& g, const BijectionFamily& alpha,
                                                  const BijectionFamily& beta, const BasisPtr& basis) {
  std::vector<VertexId> order = basis->vertices();
  if (order.empty()) return SparseBlockOperator::identity(basis);
  bool upward = true;
  for (const ExpandedEdge& e : g.edges())
    if (e.target < e.source) upward = false;
  if (!upward) std::reverse(order.begin(), order.end());

  std::vector<std::optional<std::size_t>> pi(g.edge_count());
  for (std::size_t e : g.in(order.front())) pi[e] = e;
  for (VertexId x : order) {
    for (std::size_t e : g.in(x)) {
      if (!pi[e]) return std::nullopt;
      auto f = alpha.next[*pi[e]];
      auto b = beta.next[e];
      if (!f || !b) continue;
      if (g.edge(*f).target != g.edge(*b).target) return std::nullopt;
      pi[*b] = *f;
    }
  }
  const Basis& bs = *basis;
  std::vector<std::optional<std::size_t>> image(bs.size());
  for (std::size_t i = 0; i < bs.size(); ++i) {
    image[i] = i;
    const ExpandedEdge* e = slot_edge(g, bs[i].slot);
    if (!e || e->target != bs[i].vertex) continue;
    auto pos = g.find(bs[i].slot);
    if (!pi[*pos]) continue;
    image[i] = bs.find(BlockIndex{bs[i].vertex, g.edge(*pi[*pos]).slot()});
  }
  return from_images(basis, image);
}

}  // namespace

BijectionFamily canonical_alpha(const ExpandedGraph& g) {
  BijectionFamily a{std::vector<std::optional<std::size_t>>(g.edge_count())};
  for (VertexId x : g.vertices()) {
    if (g.inflow(x) != g.outflow(x)) throw NotACycleError(x, g.inflow(x), g.outflow(x));
    match_in_order(g, x, a);
  }
  return a;
}

BijectionFamily canonical_alpha_where_balanced(const ExpandedGraph& g) {
  BijectionFamily a{std::vector<std::optional<std::size_t>>(g.edge_count())};
  for (VertexId x : g.vertices())
    if (g.inflow(x) == g.outflow(x)) match_in_order(g, x, a);
  return a;
}

BijectionFamily alpha_with_overrides(const ExpandedGraph& g,
                                     const std::map<VertexId, std::vector<std::pair<SlotId, SlotId>>>& overrides) {
  BijectionFamily a = canonical_alpha(g);
  for (const auto& [x, pairs] : overrides) {
    for (const auto& [in_slot, out_slot] : pairs) {
      auto e = g.find(in_slot);
      auto f = g.find(out_slot);
      if (!e || !f) throw InputError("alpha override at vertex " + std::to_string(x.value) + " names an unknown slot");
      if (g.edge(*e).target != x || g.edge(*f).source != x)
        throw InputError("alpha override at vertex " + std::to_string(x.value) + ": " + in_slot.to_string() + " -> " +
                         out_slot.to_string() + " does not pass through the vertex");
      a.next[*e] = *f;
    }
    if (!is_valid_at(g, a, x))
      throw InputError("alpha override at vertex " + std::to_string(x.value) + " is not a bijection I(x) -> O(x)");
  }
  return a;
}

BijectionFamily random_alpha(const ExpandedGraph& g, std::mt19937_64& rng) {
  BijectionFamily a{std::vector<std::optional<std::size_t>>(g.edge_count())};
  for (VertexId x : g.vertices()) {
    if (g.inflow(x) != g.outflow(x)) continue;
    std::vector<std::size_t> out = g.out(x);
    std::shuffle(out.begin(), out.end(), rng);
    const auto& in = g.in(x);
    for (std::size_t j = 0; j < in.size(); ++j) a.next[in[j]] = out[j];
  }
  return a;
}

bool is_valid_at(const ExpandedGraph& g, const BijectionFamily& alpha, VertexId x) {
  if (alpha.next.size() != g.edge_count()) return false;
  std::set<std::size_t> images;
  for (std::size_t e : g.in(x)) {
    const auto& f = alpha.next[e];
    if (!f || *f >= g.edge_count() || g.edge(*f).source != x) return false;
    images.insert(*f);
  }
  const auto& out = g.out(x);
  return images == std::set<std::size_t>(out.begin(), out.end());
}

bool is_valid(const ExpandedGraph& g, const BijectionFamily& alpha) {
  return std::all_of(g.vertices().begin(), g.vertices().end(),
                     [&](VertexId x) { return is_valid_at(g, alpha, x); });
}

SparseBlockOperator cycle_permutation(const ExpandedGraph& g, const BijectionFamily& alpha, const BasisPtr& basis) {
  const Basis& bs = *basis;
  std::vector<std::optional<std::size_t>> image(bs.size());
  for (std::size_t i = 0; i < bs.size(); ++i) {
    image[i] = i;
    auto pos = bs[i].slot.is_ordinal() ? std::nullopt : g.find(bs[i].slot);
    if (!pos || g.edge(*pos).target != bs[i].vertex || !alpha.next[*pos]) continue;
    const ExpandedEdge& f = g.edge(*alpha.next[*pos]);
    image[i] = bs.find(BlockIndex{f.target, f.slot()});
  }
  return from_images(basis, image);
}

CycleUnitary build_cycle_unitary(const OrientedGraph& g, const Chain1& gamma, const BijectionFamily& alpha) {
  ExpandedGraph G = expand_graph(g, gamma);
  for (VertexId x : G.vertices())
    if (G.inflow(x) != G.outflow(x)) throw NotACycleError(x, G.inflow(x), G.outflow(x));
  if (!is_valid(G, alpha)) throw PreconditionError("build_cycle_unitary: alpha is not a bijection family of G");
  std::vector<SlotId> slots = G.slots();
  if (slots.empty()) slots.push_back(SlotId::ordinal(1));
  auto basis = Basis::product(g.vertices(), slots);
  SparseBlockOperator u = cycle_permutation(G, alpha, basis);
  return CycleUnitary{std::move(G), alpha, std::move(u)};
}

CycleUnitary build_cycle_unitary(const OrientedGraph& g, const Chain1& gamma) {
  return build_cycle_unitary(g, gamma, canonical_alpha(expand_graph(g, gamma)));
}

UnitaryCertificate certify_cycle_unitary(const CycleUnitary& cu) {
  UnitaryCertificate c;
  const ExpandedGraph& G = cu.expanded;
  const Basis& basis = *cu.u.basis();
  c.unitary = is_unitary(cu.u);
  c.permutation = is_permutation(cu.u);

  const SparseBlockOperator d = minus_identity(cu.u);
  const Metric metric = graph_metric(G.as_graph());
  c.entries_adjacent = true;
  d.for_each([&](std::size_t r, std::size_t col, Integer) {
    if (!c.entries_adjacent) return;
    const Integer dist = distance(metric, basis[r].vertex, basis[col].vertex);
    if (dist > 1) {
      c.entries_adjacent = false;
      c.failure_locus = "U - 1 joins " + locus(basis[col]) + " to " + locus(basis[r]);
    }
  });
  c.propagation = c.entries_adjacent ? propagation(d, metric) : FiniteMetricSpace::kUnreachable;

  c.block_ranks_bounded = true;
  for (const auto& [key, rank] : block_ranks(d)) {
    c.max_block_rank = std::max(c.max_block_rank, rank);
    if (rank > G.valence(key.second)) {
      c.block_ranks_bounded = false;
      if (c.failure_locus.empty())
        c.failure_locus = "block (" + std::to_string(key.first.value) + ", " + std::to_string(key.second.value) +
                          ") of U - 1 has rank " + std::to_string(rank);
    }
  }
  if (c.failure_locus.empty() && !c.unitary) c.failure_locus = "U is not unitary";
  return c;
}

BijectionFamily line_alpha(const ExpandedGraph& g, const LineMatching& matching) {
  BijectionFamily a{std::vector<std::optional<std::size_t>>(g.edge_count())};
  for (VertexId x : g.vertices()) {
    const auto& in = g.in(x);
    const auto& out = g.out(x);
    if (in.size() != out.size()) continue;
    std::vector<std::size_t> sigma(in.size());
    std::iota(sigma.begin(), sigma.end(), 0);
    if (matching) {
      std::vector<std::size_t> given = matching(x);
      std::vector<std::size_t> sorted = given;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != sigma)
        throw PreconditionError("line matching at vertex " + std::to_string(x.value) + " is not a permutation");
      sigma = std::move(given);
    }
    for (std::size_t j = 0; j < in.size(); ++j) a.next[in[j]] = out[sigma[j]];
  }
  return a;
}

CycleUnitary z_line_cycle_unitary(Integer k, const Window& w, const LineMatching& matching) {
  const Integer lo = w.outer_first().value;
  const Integer hi = w.outer_last().value;
  if (hi < lo) throw PreconditionError("empty window");
  ExpandedGraph G = expand_z_line(k, lo - 1, hi + 1);
  BijectionFamily alpha = line_alpha(G, matching);
  std::vector<VertexId> vertices;
  for (Integer x = lo; x <= hi; ++x) vertices.push_back(VertexId{x});
  std::vector<SlotId> slots = G.slots();
  if (slots.empty()) slots.push_back(SlotId::ordinal(1));
  auto basis = Basis::product(vertices, slots);
  SparseBlockOperator u = cycle_permutation(G, alpha, basis);
  return CycleUnitary{std::move(G), std::move(alpha), std::move(u)};
}

Integer phi1_on_z(Integer k, const Window& w) { return index_pairing(z_line_cycle_unitary(k, w).u, w); }

AlphaIndependenceReport verify_alpha_independence(const ExpandedGraph& g, const BijectionFamily& alpha,
                                                  const BijectionFamily& beta, const BasisPtr& basis,
                                                  const Metric& metric, const Window* window) {
  AlphaIndependenceReport rep;
  const Basis& bs = *basis;
  rep.u_alpha = cycle_permutation(g, alpha, basis);
  rep.u_beta = cycle_permutation(g, beta, basis);

  // V: (x, alpha e) -> (x, beta e) for e in I(x).
  std::vector<std::optional<std::size_t>> v_image(bs.size());
  for (std::size_t i = 0; i < bs.size(); ++i) v_image[i] = i;
  for (VertexId x : bs.vertices()) {
    for (std::size_t e : g.in(x)) {
      if (!alpha.next[e] || !beta.next[e]) continue;
      auto from = bs.find(BlockIndex{x, g.edge(*alpha.next[e]).slot()});
      auto to = bs.find(BlockIndex{x, g.edge(*beta.next[e]).slot()});
      if (from) v_image[*from] = to;
    }
  }
  rep.v = from_images(basis, v_image);
  rep.v_block_diagonal =
      is_permutation_on(rep.v, window) && propagation(rep.v, metric) == 0;
  rep.v_max_block_rank = max_block_rank(minus_identity(rep.v));

  // U'(x, e) = (t(alpha e), beta e) for t(e) = x.
  std::vector<std::optional<std::size_t>> up_image(bs.size());
  for (std::size_t i = 0; i < bs.size(); ++i) {
    up_image[i] = i;
    auto pos = bs[i].slot.is_ordinal() ? std::nullopt : g.find(bs[i].slot);
    if (!pos || g.edge(*pos).target != bs[i].vertex || !alpha.next[*pos] || !beta.next[*pos]) continue;
    up_image[i] = bs.find(BlockIndex{g.edge(*alpha.next[*pos]).target, g.edge(*beta.next[*pos]).slot()});
  }
  rep.u_prime = from_images(basis, up_image);
  rep.u_prime_is_permutation = is_permutation_on(rep.u_prime, window);
  const SparseBlockOperator conj = compose(adjoint(rep.v), compose(rep.u_alpha, rep.v));
  if (auto r = first_difference(rep.u_prime, conj, window)) {
    rep.u_prime_locus = "U' and V* U^alpha V differ in row " + locus(bs[*r]);
  } else {
    rep.u_prime_equals_conjugate = true;
  }
  if (!rep.u_prime_is_permutation && rep.u_prime_locus.empty()) rep.u_prime_locus = "U' is not a permutation";

  rep.cycle_type_alpha = cycle_type(rep.u_alpha);
  rep.cycle_type_beta = cycle_type(rep.u_beta);
  rep.w = window ? line_alignment(g, alpha, beta, basis) : orbit_matching(rep.u_beta, conj);
  if (rep.w) {
    const SparseBlockOperator back = compose(adjoint(*rep.w), compose(conj, *rep.w));
    rep.conjugator_identity = !first_difference(rep.u_beta, back, window);
    rep.w_propagation = propagation(*rep.w, metric);
  }

  rep.r = compose(rep.u_beta, adjoint(rep.u_alpha));
  rep.factorization_exact = !first_difference(rep.u_beta, compose(rep.r, rep.u_alpha), window);
  rep.r_propagation = propagation(rep.r, metric);
  rep.r_is_local = true;
  std::map<VertexId, std::size_t> part;
  minus_identity(rep.r).for_each([&](std::size_t row, std::size_t col, Integer v) {
    if (window && !(window->in_interior(bs[row].vertex) && window->in_interior(bs[col].vertex))) return;
    const ExpandedEdge* er = slot_edge(g, bs[row].slot);
    const ExpandedEdge* ec = slot_edge(g, bs[col].slot);
    const bool ok = er && ec && er->source == ec->source && er->target == bs[row].vertex &&
                    ec->target == bs[col].vertex;
    if (!ok) rep.r_is_local = false;
    if (ok && row == col && v == -1) ++part[ec->source];
  });
  for (const auto& [x, n] : part) rep.r_max_part = std::max(rep.r_max_part, n);
  return rep;
}

AlphaIndependenceReport verify_alpha_independence(const OrientedGraph& g, const Chain1& gamma,
                                                  const BijectionFamily& alpha, const BijectionFamily& beta) {
  const CycleUnitary ua = build_cycle_unitary(g, gamma, alpha);
  if (!is_valid(ua.expanded, beta)) throw PreconditionError("verify_alpha_independence: beta is not a bijection family");
  return verify_alpha_independence(ua.expanded, alpha, beta, ua.u.basis(), graph_metric(ua.expanded.as_graph()));
}

EdgeNumbering EdgeNumbering::canonical(const ExpandedGraph& g) {
  EdgeNumbering n;
  n.position.resize(g.edge_count());
  std::iota(n.position.begin(), n.position.end(), 0);
  return n;
}

Compression compress_to_uniform(const CycleUnitary& cu, const EdgeNumbering& numbering, Integer n,
                                const Window* window) {
  const ExpandedGraph& G = cu.expanded;
  if (n < static_cast<Integer>(G.max_valence()))
    throw PreconditionError("compress_to_uniform: " + std::to_string(n) + " slots but G has valence " +
                            std::to_string(G.max_valence()));
  if (numbering.position.size() != G.edge_count())
    throw PreconditionError("compress_to_uniform: numbering does not cover the edges of G");

  Compression c;
  c.slots = n;
  std::vector<SlotId> ordinals;
  for (Integer j = 1; j <= n; ++j) ordinals.push_back(SlotId::ordinal(j));
  const std::vector<VertexId> vertices = cu.u.basis()->vertices();
  c.basis = Basis::merge(*cu.u.basis(), *Basis::product(vertices, ordinals));
  const Basis& bs = *c.basis;
  c.u_extended = embed(cu.u, c.basis, Extension::Identity);

  std::vector<std::optional<std::size_t>> image(bs.size());
  for (std::size_t i = 0; i < bs.size(); ++i) image[i] = i;
  for (VertexId x : vertices) {
    std::vector<std::size_t> in = G.in(x);
    std::sort(in.begin(), in.end(),
              [&](std::size_t a, std::size_t b) { return numbering.position[a] < numbering.position[b]; });
    for (std::size_t j = 0; j < in.size(); ++j) {
      auto a = bs.find(BlockIndex{x, SlotId::ordinal(static_cast<Integer>(j + 1))});
      auto b = bs.find(BlockIndex{x, G.edge(in[j]).slot()});
      if (!a || !b) continue;
      image[*a] = *b;
      image[*b] = *a;
    }
  }
  c.t = from_images(c.basis, image);
  c.u_tilde = compose(adjoint(c.t), compose(c.u_extended, c.t));
  c.conjugation_exact = compose(c.t, compose(c.u_tilde, adjoint(c.t))) == c.u_extended;

  c.confined = true;
  minus_identity(c.u_tilde).for_each([&](std::size_t r, std::size_t col, Integer) {
    if (window && !window->in_interior(bs[r].vertex)) return;
    const bool ok = bs[r].slot.is_ordinal() && bs[col].slot.is_ordinal() && bs[r].slot.major <= n &&
                    bs[col].slot.major <= n;
    if (!ok && c.confined) {
      c.confined = false;
      c.failure_locus = "U~ - 1 touches " + locus(bs[col]) + " -> " + locus(bs[r]);
    }
  });
  c.unitary = window ? is_unitary_on(c.u_tilde, *window) : is_unitary(c.u_tilde);
  if (!c.unitary && c.failure_locus.empty()) c.failure_locus = "U~ is not unitary";
  return c;
}

}  // namespace coarsek
