#include "coarsek/chains.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coarsek {

Integer Chain0::at(VertexId v) const {
  auto it = coeffs.find(v);
  return it == coeffs.end() ? 0 : it->second;
}

void Chain0::add(VertexId v, Integer c) {
  if (c == 0) return;
  Integer& slot = coeffs[v];
  slot = checked_add(slot, c);
  if (slot == 0) coeffs.erase(v);
}

Integer Chain1::at(EdgeId e) const {
  auto it = coeffs.find(e);
  return it == coeffs.end() ? 0 : it->second;
}

void Chain1::add(EdgeId e, Integer c) {
  if (c == 0) return;
  Integer& slot = coeffs[e];
  slot = checked_add(slot, c);
  if (slot == 0) coeffs.erase(e);
}

Chain0 operator+(const Chain0& a, const Chain0& b) {
  Chain0 out = a;
  for (const auto& [v, c] : b.coeffs) out.add(v, c);
  return out;
}

Chain1 operator+(const Chain1& a, const Chain1& b) {
  Chain1 out = a;
  for (const auto& [e, c] : b.coeffs) out.add(e, c);
  return out;
}

Chain0 operator-(const Chain0& a) {
  Chain0 out;
  for (const auto& [v, c] : a.coeffs) out.coeffs.emplace(v, -c);
  return out;
}

Chain1 operator-(const Chain1& a) {
  Chain1 out;
  for (const auto& [e, c] : a.coeffs) out.coeffs.emplace(e, -c);
  return out;
}

Integer BandedZChain::at(Integer i) const {
  if (i < window_start) return tail_left;
  if (i >= window_end()) return tail_right;
  return window_values[static_cast<std::size_t>(i - window_start)];
}

BandedZChain BandedZChain::constant(int degree, Integer value) {
  return BandedZChain{degree, value, value, 0, {}};
}

BandedZChain BandedZChain::finite(int degree, Integer start, std::vector<Integer> values) {
  return BandedZChain{degree, 0, 0, start, std::move(values)};
}

bool same_sequence(const BandedZChain& a, const BandedZChain& b) {
  if (a.degree != b.degree || a.tail_left != b.tail_left || a.tail_right != b.tail_right) return false;
  Integer lo = std::min(a.window_start, b.window_start);
  Integer hi = std::max(a.window_end(), b.window_end());
  for (Integer i = lo; i <= hi; ++i)
    if (a.at(i) != b.at(i)) return false;
  return true;
}

UniformBound uniform_bound(const Chain0& c) {
  Integer top = 0;
  for (const auto& [v, x] : c.coeffs) top = std::max(top, std::abs(x));
  return UniformBound{top + 1};
}

UniformBound uniform_bound(const Chain1& c) {
  Integer top = 0;
  for (const auto& [e, x] : c.coeffs) top = std::max(top, std::abs(x));
  return UniformBound{top + 1};
}

UniformBound uniform_bound(const BandedZChain& c) {
  Integer top = std::max(std::abs(c.tail_left), std::abs(c.tail_right));
  for (Integer x : c.window_values) top = std::max(top, std::abs(x));
  return UniformBound{top + 1};
}

Chain0 boundary(const OrientedGraph& g, const Chain1& gamma) {
  Chain0 out;
  for (const auto& [id, c] : gamma.coeffs) {
    const Edge& e = g.edge(id);
    out.add(e.target, c);
    out.add(e.source, -c);
  }
  return out;
}

BandedZChain boundary(const BandedZChain& gamma) {
  if (gamma.degree != 1) throw PreconditionError("boundary: expected a degree-1 banded chain");
  // c_i = gamma_{i-1} - gamma_i; only positions in [start, end] can be nonzero.
  BandedZChain c{0, 0, 0, gamma.window_start, {}};
  for (Integer i = gamma.window_start; i <= gamma.window_end(); ++i)
    c.window_values.push_back(checked_sub(gamma.at(i - 1), gamma.at(i)));
  return c;
}

FlowBalance flow_balance(const OrientedGraph& g, const Chain1& gamma) {
  FlowBalance out;
  for (VertexId v : g.vertices()) {
    out.inflow[v] = 0;
    out.outflow[v] = 0;
  }
  for (const auto& [id, c] : gamma.coeffs) {
    const Edge& e = g.edge(id);
    out.inflow[e.target] = checked_add(out.inflow[e.target], c);
    out.outflow[e.source] = checked_add(out.outflow[e.source], c);
  }
  return out;
}

std::optional<VertexId> cycle_violation(const OrientedGraph& g, const Chain1& gamma) {
  FlowBalance flow = flow_balance(g, gamma);
  for (VertexId v : g.vertices())
    if (flow.inflow[v] != flow.outflow[v]) return v;
  return std::nullopt;
}

bool is_cycle(const OrientedGraph& g, const Chain1& gamma) {
  bool by_boundary = boundary(g, gamma).is_zero();
  bool by_flow = !cycle_violation(g, gamma).has_value();
  if (by_boundary != by_flow) throw std::logic_error("is_cycle: boundary and flow characterizations disagree");
  return by_boundary;
}

bool is_cycle(const BandedZChain& gamma) {
  if (gamma.degree != 1) throw PreconditionError("is_cycle: expected a degree-1 banded chain");
  const BandedZChain c = boundary(gamma);
  return std::all_of(c.window_values.begin(), c.window_values.end(), [](Integer x) { return x == 0; });
}

std::vector<Integer> AbelianGroup::torsion() const {
  std::vector<Integer> out;
  for (Integer d : elementary_divisors)
    if (d > 1) out.push_back(d);
  return out;
}

std::string AbelianGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (Integer d : torsion()) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

IntegerMatrix boundary_matrix(const OrientedGraph& g) {
  IntegerMatrix d(g.vertex_count(), g.edge_count());
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    const Edge& e = g.edges()[j];
    d(g.index_of(e.target), j) += 1;
    d(g.index_of(e.source), j) -= 1;
  }
  return d;
}

std::size_t connected_components(const OrientedGraph& g) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t count = g.vertex_count();
  for (const Edge& e : g.edges()) {
    std::size_t a = find(g.index_of(e.source));
    std::size_t b = find(g.index_of(e.target));
    if (a != b) {
      parent[a] = b;
      --count;
    }
  }
  return count;
}

std::optional<Chain1> boundary_preimage(const OrientedGraph& g, const Chain0& c) {
  const std::size_t n = g.vertex_count();
  std::vector<Integer> demand(n, 0);
  for (const auto& [v, x] : c.coeffs) demand[g.index_of(v)] = x;
  std::vector<std::optional<EdgeId>> up(n);
  std::vector<std::size_t> parent(n), order;
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> roots;
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    roots.push_back(root);
    std::vector<std::size_t> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t x = queue[head];
      order.push_back(x);
      const VertexId v = g.vertices()[x];
      auto visit = [&](EdgeId e, VertexId w) {
        const std::size_t y = g.index_of(w);
        if (seen[y]) return;
        seen[y] = 1;
        up[y] = e;
        parent[y] = x;
        queue.push_back(y);
      };
      for (EdgeId e : g.out_edges(v)) visit(e, g.edge(e).target);
      for (EdgeId e : g.in_edges(v)) visit(e, g.edge(e).source);
    }
  }
  Chain1 gamma;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t y = *it;
    if (!up[y]) continue;
    const Edge& e = g.edge(*up[y]);
    const bool into_y = g.index_of(e.target) == y;
    const Integer value = into_y ? demand[y] : -demand[y];
    gamma.add(e.id, value);
    demand[parent[y]] = into_y ? checked_add(demand[parent[y]], value) : checked_sub(demand[parent[y]], value);
  }
  for (std::size_t r : roots)
    if (demand[r] != 0) return std::nullopt;
  return gamma;
}

FiniteHomology homology_finite(const OrientedGraph& g) {
  const IntegerMatrix d = boundary_matrix(g);
  const SmithForm snf = smith_normal_form(d);
  FiniteHomology out;
  out.components = connected_components(g);
  out.h0.free_rank = g.vertex_count() - snf.rank();
  out.h0.elementary_divisors = snf.divisors;
  out.h1_rank = g.edge_count() - snf.rank();
  for (std::size_t j = snf.rank(); j < g.edge_count(); ++j) {
    Chain1 z;
    for (std::size_t i = 0; i < g.edge_count(); ++i) z.add(g.edges()[i].id, snf.right(i, j));
    out.h1_basis.push_back(std::move(z));
  }
  return out;
}

Integer ZBoundarySolution::value_at(Integer i) const {
  // gamma_i = gamma_{i-1} - c_i, anchored at gamma_{anchor} = 0.
  Integer value = 0;
  if (i > anchor_index) {
    for (Integer j = anchor_index + 1; j <= i; ++j) value = checked_sub(value, source.at(j));
  } else {
    for (Integer j = i + 1; j <= anchor_index; ++j) value = checked_add(value, source.at(j));
  }
  return value;
}

ZBoundarySolution solve_boundary_on_z(const BandedZChain& c) {
  if (c.degree != 0) throw PreconditionError("solve_boundary_on_z: expected a degree-0 banded chain");
  ZBoundarySolution out;
  out.source = c;
  out.anchor_index = c.window_start - 1;
  out.slope_right = -c.tail_right;
  out.slope_left = -c.tail_left;
  out.bounded = c.has_finite_support();
  if (out.bounded) {
    BandedZChain gamma{1, 0, 0, c.window_start, {}};
    Integer running = 0;
    for (Integer x : c.window_values) {
      running = checked_sub(running, x);
      gamma.window_values.push_back(running);
    }
    gamma.tail_right = running;
    out.gamma = std::move(gamma);
  }
  return out;
}

ZUfClass uf_class_on_z(const BandedZChain& c) {
  if (c.degree != 0) throw PreconditionError("uf_class_on_z: expected a degree-0 banded chain");
  return ZUfClass{c.tail_left, c.tail_right};
}

}  // namespace coarsek
