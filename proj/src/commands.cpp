#include "coarsek/commands.hpp"

#include <algorithm>
#include <numeric>

#include "coarsek/generators.hpp"
#include "coarsek/phi0.hpp"
#include "coarsek/phi1.hpp"

namespace coarsek {

namespace {

std::string vertex_text(VertexId v) { return "vertex " + std::to_string(v.value); }

const BandedZGraph& require_line(const BandedZGraph& b, const char* what) {
  if (!b.extra_edges.empty() || (b.edges_per_cell != 0 && b.edges_per_cell != 1))
    throw InputError(std::string(what) +
                     ": banded graphs are supported as the Cayley line (edges_per_cell 1) or the edgeless line "
                     "(edges_per_cell 0), without perturbation");
  return b;
}

// Checks shared by every projection pair.
void add_pair_checks(Report& r, const ProjectionPair& pair, const Chain0& c, Integer bound) {
  const auto& f = pair.f;
  const auto& g = pair.g;
  r.add("f_c and g_c are diagonal projections", is_diagonal(f) && is_diagonal(g) && is_projection(f) && is_projection(g));
  r.add("f_c g_c = 0", compose(f, g).nnz() == 0);
  std::optional<VertexId> bad;
  for (VertexId x : f.basis()->vertices()) {
    const Integer cx = c.at(x);
    if (static_cast<Integer>(block_rank(f, x, x)) != std::max<Integer>(cx, 0) ||
        static_cast<Integer>(block_rank(g, x, x)) != std::max<Integer>(-cx, 0)) {
      bad = x;
      break;
    }
  }
  r.add("rank f_x = max(c_x, 0) and rank g_x = max(-c_x, 0)", !bad, {}, bad ? vertex_text(*bad) : std::string{});
  Integer top = 0;
  auto scan = [&](std::size_t i, std::size_t, Integer) { top = std::max(top, (*f.basis())[i].slot.major); };
  f.for_each(scan);
  g.for_each(scan);
  r.add("slots used stay below the uniform bound", top < bound,
        "largest slot O" + std::to_string(top) + ", bound " + std::to_string(bound));
}

void add_witness_checks(Report& r, const BoundaryWitness& w, bool dump) {
  const std::string at = w.failing_vertex ? vertex_text(*w.failing_vertex) : std::string{};
  r.add("witness: V*V is the projection onto the A_x", w.vstar_v_is_proj_a);
  r.add("witness: V V* is the projection onto the B_x", w.v_vstar_is_proj_b);
  r.add("witness: rank (V*V)_x = o(x) and rank (V V*)_x = i(x)", w.ranks_match_flow, {}, at);
  r.add("witness: i(x) - o(x) = c_x", w.flow_matches_chain, {}, at);
  r.add("witness: V V* ~ f' = p_i(x)", w.f_prime_equivalent);
  r.add("witness: V* V ~ g' = p_o(x)", w.g_prime_equivalent);
  r.add("witness: f' - f_c ~ g' - g_c", w.excess_equivalent);
  r.add("witness: propagation of V <= 1", w.propagation <= 1, "propagation " + std::to_string(w.propagation));
  if (dump) r.dumps["V"] = coarsek::dump(w.v);
}

Report phi0_finite(const OrientedGraph& g, const Chain0& c, const std::optional<Chain1>& given, const CommandOptions& o) {
  Report r;
  r.title = "phi0";
  const ProjectionPair pair = build_projection_pair(g, c);
  const Integer bound = uniform_bound(c).bound;
  add_pair_checks(r, pair, c, bound);
  const Integer sum = std::accumulate(c.coeffs.begin(), c.coeffs.end(), Integer{0},
                                      [](Integer s, const auto& kv) { return checked_add(s, kv.second); });
  const Integer sig = k0_signature(pair);
  r.add("k0 signature = sum of c_x", sig == sum);
  r.certificates["chain"] = chain_to_json(c, g);
  r.certificates["k0_signature"] = sig;
  r.certificates["uniform_bound"] = bound;

  const std::optional<Chain1> gamma = given ? given : boundary_preimage(g, c);
  r.certificates["is_boundary"] = gamma.has_value();
  if (gamma) {
    r.certificates["gamma"] = chain_to_json(*gamma, g);
    const BoundaryWitness w = boundary_witness(g, *gamma);
    add_witness_checks(r, w, o.dump);
    r.add("k0 signature of a boundary is 0", sig == 0);
  }
  if (o.dump) {
    r.dumps["f_c"] = dump(pair.f);
    r.dumps["g_c"] = dump(pair.g);
  }
  return r;
}

Report phi0_line(const BandedZGraph& b, const BandedZChain& c, const CommandOptions& o) {
  Report r;
  r.title = "phi0";
  const Window w = window_of(o);
  const ProjectionPair pair = build_projection_pair(c, w);
  add_pair_checks(r, pair, pair.chain, uniform_bound(c).bound);
  r.certificates["chain"] = chain_to_json(c);
  const ZUfClass cls = uf_class_on_z(c);
  if (b.is_edgeless()) {
    // d = 0: the class of c in H0^uf is c itself, and phi0 forgets all but the tails.
    r.certificates["H0_uf_class"] = "the chain itself (no boundaries)";
    r.certificates["phi0_image"] = {cls.tail_left, cls.tail_right};
    return r;
  }
  const ZBoundarySolution sol = solve_boundary_on_z(c);
  r.certificates["uf_class"] = {cls.tail_left, cls.tail_right};
  r.certificates["bounded"] = sol.bounded;
  r.certificates["slope_left"] = sol.slope_left;
  r.certificates["slope_right"] = sol.slope_right;
  std::optional<Integer> bad;
  for (Integer i = w.outer_first().value; i <= w.outer_last().value && !bad; ++i)
    if (checked_sub(sol.value_at(i - 1), sol.value_at(i)) != c.at(i)) bad = i;
  r.add("d(gamma) = c on the window", !bad, {}, bad ? vertex_text(VertexId{*bad}) : std::string{});
  r.add("bounded iff both tails vanish", sol.bounded == c.has_finite_support());
  if (sol.gamma) {
    r.certificates["gamma"] = chain_to_json(*sol.gamma);
    r.add("bounded witness has boundary c", same_sequence(boundary(*sol.gamma), c));
  }
  return r;
}

Window doubled(const Window& w) {
  return Window{VertexId{2 * w.first.value}, VertexId{2 * w.last.value}, w.margin};
}

Report phi1_finite(const OrientedGraph& g, const Chain1& gamma, const AlphaOverrides* overrides,
                   const CommandOptions& o) {
  if (auto v = cycle_violation(g, gamma)) {
    const FlowBalance fb = flow_balance(g, gamma);
    auto get = [&](const std::map<VertexId, Integer>& m) {
      auto it = m.find(*v);
      return it == m.end() ? Integer{0} : it->second;
    };
    throw NotACycleError(*v, get(fb.inflow), get(fb.outflow));
  }
  Report r;
  r.title = "phi1";
  const ExpandedGraph G = expand_graph(g, gamma);
  const BijectionFamily canonical = canonical_alpha(G);
  const BijectionFamily alpha = overrides ? alpha_with_overrides(G, *overrides) : canonical;
  const CycleUnitary cu = build_cycle_unitary(g, gamma, alpha);
  const UnitaryCertificate cert = certify_cycle_unitary(cu);
  r.add("U is unitary", cert.unitary);
  r.add("U is a permutation matrix", cert.permutation);
  r.add("U - 1 joins only equal or adjacent vertices of G", cert.entries_adjacent, {}, cert.failure_locus);
  r.add("blocks of U - 1 have rank at most the valence", cert.block_ranks_bounded, {}, cert.failure_locus);
  r.certificates["gamma"] = chain_to_json(gamma, g);
  r.certificates["propagation"] = cert.propagation;
  r.certificates["max_block_rank"] = cert.max_block_rank;

  const Integer n = static_cast<Integer>(G.max_valence());
  const Compression comp = compress_to_uniform(cu, EdgeNumbering::canonical(G), n);
  r.add("U~ = T* U T", comp.conjugation_exact);
  r.add("U~ - 1 lives on slots O1..On", comp.confined, "n = " + std::to_string(n), comp.failure_locus);
  r.add("U~ is unitary", comp.unitary);
  r.certificates["n"] = n;

  if (overrides) {
    const AlphaIndependenceReport ai = verify_alpha_independence(g, gamma, canonical, alpha);
    r.add("V is block diagonal", ai.v_block_diagonal);
    r.add("U' = V* U^alpha V", ai.u_prime_equals_conjugate, {}, ai.u_prime_locus);
    r.add("W with U^beta = W* U' W exists", ai.w.has_value() && ai.conjugator_identity);
    r.add("U^beta = R U^alpha with R local", ai.factorization_exact && ai.r_is_local,
          "R has propagation " + std::to_string(ai.r_propagation) + ", parts of size <= " +
              std::to_string(ai.r_max_part));
    r.certificates["cycle_type_canonical"] = ai.cycle_type_alpha;
    r.certificates["cycle_type_override"] = ai.cycle_type_beta;
    if (o.dump) {
      r.dumps["V"] = dump(ai.v);
      r.dumps["U_prime"] = dump(ai.u_prime);
      r.dumps["R"] = dump(ai.r);
    }
  }
  if (o.dump) {
    r.dumps["U"] = dump(cu.u);
    r.dumps["U_tilde"] = dump(comp.u_tilde);
  }
  return r;
}

Report phi1_line(const BandedZGraph& b, const BandedZChain& gamma, const CommandOptions& o) {
  if (gamma.degree != 1) throw InputError("phi1: expected a degree-1 chain");
  if (b.is_edgeless()) {
    if (!(gamma.has_finite_support() && std::all_of(gamma.window_values.begin(), gamma.window_values.end(),
                                                    [](Integer x) { return x == 0; })))
      throw InputError("phi1: the edgeless line carries no nonzero 1-chains");
  } else if (!is_cycle(gamma)) {
    const BandedZChain c = boundary(gamma);
    Integer x = c.window_start;
    while (c.at(x) == 0 && x < c.window_end()) ++x;
    throw NotACycleError(VertexId{x}, gamma.at(x - 1), gamma.at(x));
  }
  Report r;
  r.title = "phi1";
  const Window w = window_of(o);
  const Integer k = b.is_edgeless() ? 0 : gamma.tail_left;
  const CycleUnitary cu = z_line_cycle_unitary(k, w);
  r.add("U is unitary on the window interior", is_unitary_on(cu.u, w));
  const Integer p = propagation(cu.u, LineMetric{});
  r.add("U - 1 has propagation <= 1", p <= 1, "propagation " + std::to_string(p));
  const IndexPairing ip = index_pairing_details(cu.u, w);
  const Integer wide = phi1_on_z(k, doubled(w));
  const Integer s = index_pairing(forward_shift(w), w);
  r.add("index agrees on the doubled window", ip.index == wide);
  r.add("index = s k with s the shift index", ip.index == s * k, "s = " + std::to_string(s));
  r.add("index is concentrated near the cut", ip.far_trace == 0);
  const Compression comp = compress_to_uniform(cu, EdgeNumbering::canonical(cu.expanded),
                                               static_cast<Integer>(cu.expanded.max_valence()), &w);
  r.add("U~ = T* U T", comp.conjugation_exact);
  r.add("U~ - 1 lives on slots O1..On", comp.confined, {}, comp.failure_locus);
  r.add("index of U~ equals index of U", index_pairing(comp.u_tilde, w) == ip.index);
  r.certificates["k"] = k;
  r.certificates["index"] = ip.index;
  r.certificates["shift_index"] = s;
  r.certificates["window"] = {w.first.value, w.last.value, w.margin};
  if (o.dump) {
    r.dumps["U"] = dump(cu.u);
    r.dumps["U_tilde"] = dump(comp.u_tilde);
  }
  return r;
}

Report example_5_1(const CommandOptions& o) {
  Report r;
  r.title = "example_5_1";
  const Window w = window_of(o);
  const BandedZGraph line{1, {}};
  r.add("K_1 = 4 for the Cayley line", check_bounded_geometry(line, 1) == 4);

  bool constants = true;
  for (Integer k = -3; k <= 3; ++k) constants = constants && is_cycle(BandedZChain::constant(1, k));
  const bool others = !is_cycle(BandedZChain::finite(1, 0, {1})) && !is_cycle(BandedZChain{1, 0, 1, 0, {}}) &&
                      !is_cycle(BandedZChain{1, 2, 2, -1, {2, 3, 2}});
  r.add("banded cycles are exactly the constants", constants && others);

  const Integer s = index_pairing(forward_shift(w), w);
  r.add("forward shift has index -1", s == -1);
  const Window w2 = doubled(w);
  std::vector<Integer> indices;
  for (Integer k = -3; k <= 3; ++k) {
    const Integer a = phi1_on_z(k, w);
    const Integer b = phi1_on_z(k, w2);
    indices.push_back(a);
    r.add("phi1(" + std::to_string(k) + ") = s k at N and 2N", a == s * k && b == a,
          std::to_string(a) + " / " + std::to_string(b));
  }
  r.certificates["phi1_indices_k_-3_to_3"] = indices;

  Rng rng(o.seed);
  std::uniform_int_distribution<Integer> coeff(-3, 3), start(-8, 8), len(1, 6);
  std::size_t ok = 0;
  const std::size_t trials = 50;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Integer> values(static_cast<std::size_t>(len(rng)));
    for (Integer& x : values) x = coeff(rng);
    const BandedZChain c = BandedZChain::finite(0, start(rng), values);
    const ZBoundarySolution sol = solve_boundary_on_z(c);
    if (sol.bounded && sol.gamma && same_sequence(boundary(*sol.gamma), c) && uf_class_on_z(c).is_trivial()) ++ok;
  }
  r.add("finite-support 0-chains have bounded witnesses", ok == trials,
        std::to_string(ok) + "/" + std::to_string(trials));
  const BandedZChain one = BandedZChain::constant(0, 1);
  const BandedZChain step{0, 0, 1, 0, {}};
  const ZBoundarySolution s1 = solve_boundary_on_z(one);
  const ZBoundarySolution s2 = solve_boundary_on_z(step);
  r.add("constant 1 has no bounded solution", !s1.bounded && s1.slope_left != 0 && s1.slope_right != 0,
        "slopes " + std::to_string(s1.slope_left) + ", " + std::to_string(s1.slope_right));
  r.add("step (0, 1) has no bounded solution", !s2.bounded && s2.slope_right != 0,
        "slopes " + std::to_string(s2.slope_left) + ", " + std::to_string(s2.slope_right));
  const ZUfClass c0 = uf_class_on_z(BandedZChain::finite(0, 0, {1, -2}));
  const ZUfClass c1 = uf_class_on_z(one);
  const ZUfClass c2 = uf_class_on_z(step);
  r.add("uf classes separate finite, constant and step chains", c0 != c1 && c1 != c2 && c0 != c2);

  bool comp_ok = true;
  for (Integer k = -3; k <= 3; ++k) {
    const CycleUnitary cu = z_line_cycle_unitary(k, w);
    const Compression comp = compress_to_uniform(cu, EdgeNumbering::canonical(cu.expanded),
                                                 static_cast<Integer>(cu.expanded.max_valence()), &w);
    comp_ok = comp_ok && comp.conjugation_exact && comp.confined &&
              index_pairing(comp.u_tilde, w) == index_pairing(cu.u, w);
  }
  r.add("compression preserves the index", comp_ok);

  std::size_t equal = 0, total = 0;
  for (Integer k : {2, 3, -2}) {
    for (int t = 0; t < 4; ++t) {
      auto random_matching = [&rng, k](VertexId) {
        std::vector<std::size_t> p(static_cast<std::size_t>(std::abs(k)));
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        return p;
      };
      const Integer a = index_pairing(z_line_cycle_unitary(k, w, random_matching).u, w);
      const Integer b = index_pairing(z_line_cycle_unitary(k, w, random_matching).u, w);
      ++total;
      if (a == b && a == s * k) ++equal;
    }
  }
  r.add("index does not depend on the matchings", equal == total, std::to_string(equal) + "/" + std::to_string(total));
  return r;
}

Report example_5_2(const CommandOptions& o) {
  Report r;
  r.title = "example_5_2";
  const Window w = window_of(o);
  const BandedZGraph edgeless{0, {}};
  r.add("K_1 = 2 for the edgeless line", check_bounded_geometry(edgeless, 1) == 2);
  const OrientedGraph patch = z_line_graph(w.outer_first().value, w.outer_last().value, 0);
  const FiniteHomology h = homology_finite(patch);
  r.add("no edges, so H1 = 0", patch.edge_count() == 0 && h.h1_rank == 0);
  r.add("d = 0, so every 0-chain is its own class", h.h0.free_rank == patch.vertex_count() && h.h0.torsion().empty());
  const CycleUnitary cu = z_line_cycle_unitary(0, w);
  r.add("phi1 has empty domain: U is the identity with index 0",
        cu.expanded.edge_count() == 0 && cu.u == SparseBlockOperator::identity(cu.u.basis()) &&
            index_pairing(cu.u, w) == 0);
  const BandedZChain delta = BandedZChain::finite(0, 0, {1});
  const BandedZChain one = BandedZChain::constant(0, 1);
  const ZUfClass a = uf_class_on_z(delta);
  const ZUfClass b = uf_class_on_z(one);
  r.add("phi0 is the quotient onto tail pairs: delta_0 != 0 maps to 0, 1 maps to (1, 1)",
        delta.at(0) != 0 && a.is_trivial() && b == ZUfClass{1, 1});
  r.certificates["H0_BM"] = "C(Z,Z)";
  r.certificates["H0_uf"] = "C_b(Z,Z)";
  r.certificates["H1"] = "0";
  return r;
}

Report random_scenario(const CommandOptions& o) {
  Report r;
  r.title = "random";
  Rng rng(o.seed);
  std::size_t unitary = 0, local = 0, witness = 0, k0 = 0, compressed = 0;
  const std::size_t trials = 20;
  for (std::size_t t = 0; t < trials; ++t) {
    const OrientedGraph g = random_graph_within(rng, 12, 24);
    const Chain1 gamma = random_cycle(rng, g);
    const CycleUnitary cu = build_cycle_unitary(g, gamma);
    const UnitaryCertificate cert = certify_cycle_unitary(cu);
    if (cert.unitary && cert.permutation) ++unitary;
    if (cert.entries_adjacent && cert.block_ranks_bounded) ++local;
    const Compression comp = compress_to_uniform(cu, EdgeNumbering::canonical(cu.expanded),
                                                 static_cast<Integer>(cu.expanded.max_valence()));
    if (comp.all_passed()) ++compressed;
    const Chain1 any = random_chain1(rng, g);
    const BoundaryWitness w = boundary_witness(g, any);
    if (w.all_passed()) ++witness;
    if (k0_signature(build_projection_pair(g, boundary(g, any))) == 0) ++k0;
  }
  auto frac = [&](std::size_t n) { return std::to_string(n) + "/" + std::to_string(trials); };
  r.add("U_gamma unitary permutation", unitary == trials, frac(unitary));
  r.add("U_gamma - 1 adjacent with bounded block ranks", local == trials, frac(local));
  r.add("compression exact and confined", compressed == trials, frac(compressed));
  r.add("boundary witness identities", witness == trials, frac(witness));
  r.add("k0 signature of boundaries is 0", k0 == trials, frac(k0));
  r.certificates["seed"] = o.seed;
  return r;
}

}  // namespace

Window window_of(const CommandOptions& o) {
  if (o.window < 1) throw InputError("--window must be at least 1");
  if (o.margin < 0) throw InputError("--margin must be nonnegative");
  return Window::centered(o.window, o.margin);
}

Report homology_report(const GraphSpec& spec, const CommandOptions& o) {
  Report r;
  r.title = "homology";
  if (const auto* g = std::get_if<OrientedGraph>(&spec)) {
    const FiniteHomology h = homology_finite(*g);
    const bool cycles = std::all_of(h.h1_basis.begin(), h.h1_basis.end(),
                                    [&](const Chain1& z) { return is_cycle(*g, z); });
    r.add("H1 basis elements are cycles", cycles);
    r.add("rank H1 = |E| - |V| + components",
          static_cast<Integer>(h.h1_rank) ==
              static_cast<Integer>(g->edge_count()) - static_cast<Integer>(g->vertex_count()) +
                  static_cast<Integer>(h.components));
    r.add("H0 is free on the components", h.h0.free_rank == h.components && h.h0.torsion().empty());
    r.certificates["H0"] = h.h0.to_string();
    r.certificates["H1_rank"] = h.h1_rank;
    Json basis = Json::array();
    for (const Chain1& z : h.h1_basis) basis.push_back(chain_to_json(z, *g));
    r.certificates["H1_basis"] = basis;
    r.certificates["components"] = h.components;
    r.certificates["K_1"] = check_bounded_geometry(*g, 1);
    return r;
  }
  const BandedZGraph& b = require_line(std::get<BandedZGraph>(spec), "homology");
  r.certificates["K_1"] = check_bounded_geometry(b, 1);
  if (b.is_edgeless()) {
    const Report e = example_5_2(o);
    for (const Check& c : e.checks)
      if (c.name.rfind("phi", 0) != 0 && c.name.rfind("K_1", 0) != 0) r.checks.push_back(c);
    r.certificates["H0_BM"] = "C(Z,Z)";
    r.certificates["H0_uf"] = "C_b(Z,Z)";
    r.certificates["H1_BM"] = "0";
    r.certificates["H1_uf"] = "0";
    return r;
  }
  bool constants = true;
  for (Integer k = -3; k <= 3; ++k) constants = constants && is_cycle(BandedZChain::constant(1, k));
  r.add("constant 1-chains are cycles", constants);
  r.add("non-constant banded 1-chains are not cycles",
        !is_cycle(BandedZChain::finite(1, 0, {1})) && !is_cycle(BandedZChain{1, 0, 1, 0, {}}));
  const Window w = window_of(o);
  bool every = true;
  for (const BandedZChain& c : {BandedZChain::constant(0, 1), BandedZChain{0, 0, 1, 0, {}},
                                BandedZChain{0, -2, 3, -1, {4, 0, 1}}}) {
    const ZBoundarySolution sol = solve_boundary_on_z(c);
    for (Integer i = w.first.value; i <= w.last.value; ++i)
      every = every && checked_sub(sol.value_at(i - 1), sol.value_at(i)) == c.at(i);
  }
  r.add("banded 0-chains are Borel-Moore boundaries", every);
  r.add("constant 1 is not a uniformly finite boundary", !solve_boundary_on_z(BandedZChain::constant(0, 1)).bounded);
  r.certificates["H0_BM"] = "0";
  r.certificates["H0_uf"] = "C_b(Z,Z)/(1-S), banded invariant (tail_left, tail_right)";
  r.certificates["H1_BM"] = "Z";
  r.certificates["H1_uf"] = "Z";
  return r;
}

Report phi0_report(const GraphSpec& spec, const ChainValue& chain, const CommandOptions& o) {
  if (const auto* g = std::get_if<OrientedGraph>(&spec)) {
    if (const auto* c = std::get_if<Chain0>(&chain)) return phi0_finite(*g, *c, std::nullopt, o);
    if (const auto* gamma = std::get_if<Chain1>(&chain)) return phi0_finite(*g, boundary(*g, *gamma), *gamma, o);
    throw InputError("phi0: banded chain on a finite graph");
  }
  const BandedZGraph& b = require_line(std::get<BandedZGraph>(spec), "phi0");
  const auto* c = std::get_if<BandedZChain>(&chain);
  if (!c) throw InputError("phi0: expected a banded chain on the integer line");
  if (c->degree == 1) {
    if (b.is_edgeless()) throw InputError("phi0: the edgeless line carries no 1-chains");
    return phi0_line(b, boundary(*c), o);
  }
  return phi0_line(b, *c, o);
}

Report phi1_report(const GraphSpec& spec, const ChainValue& chain, const AlphaOverrides* overrides,
                   const CommandOptions& o) {
  if (const auto* g = std::get_if<OrientedGraph>(&spec)) {
    const auto* gamma = std::get_if<Chain1>(&chain);
    if (!gamma) throw InputError("phi1: expected a 1-chain");
    return phi1_finite(*g, *gamma, overrides, o);
  }
  const BandedZGraph& b = require_line(std::get<BandedZGraph>(spec), "phi1");
  if (overrides) throw InputError("phi1: alpha overrides apply to finite graphs only");
  const auto* gamma = std::get_if<BandedZChain>(&chain);
  if (!gamma) throw InputError("phi1: expected a banded chain on the integer line");
  return phi1_line(b, *gamma, o);
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{"example_5_1", "example_5_2", "random"};
  return names;
}

Report scenario_report(const std::string& name, const CommandOptions& o) {
  if (name == "example_5_1") return example_5_1(o);
  if (name == "example_5_2") return example_5_2(o);
  if (name == "random") return random_scenario(o);
  throw InputError("unknown scenario '" + name + "'");
}

}  // namespace coarsek
