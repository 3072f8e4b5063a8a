#include "coarsek/generators.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace coarsek {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

EdgeSpec oriented(Rng& rng, Integer a, Integer b) {
  if (rng() & 1) std::swap(a, b);
  return EdgeSpec{VertexId{a}, VertexId{b}, "", std::nullopt};
}

}  // namespace

OrientedGraph random_connected_graph(Rng& rng, std::size_t n, std::size_t extra) {
  if (n == 0) throw PreconditionError("random_connected_graph: no vertices");
  std::vector<VertexId> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back(VertexId{static_cast<Integer>(i)});
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 1; i < n; ++i)
    edges.push_back(oriented(rng, static_cast<Integer>(uniform(rng, 0, i - 1)), static_cast<Integer>(i)));
  if (n >= 2) {
    for (std::size_t k = 0; k < extra; ++k) {
      const std::size_t a = uniform(rng, 0, n - 1);
      std::size_t b = uniform(rng, 0, n - 2);
      if (b >= a) ++b;
      edges.push_back(oriented(rng, static_cast<Integer>(a), static_cast<Integer>(b)));
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].label = "e" + std::to_string(i);
  return OrientedGraph(std::move(vertices), edges);
}

OrientedGraph random_graph_within(Rng& rng, std::size_t max_vertices, std::size_t max_edges) {
  const std::size_t n = uniform(rng, 2, std::max<std::size_t>(2, std::min(max_vertices, max_edges + 1)));
  const std::size_t extra = uniform(rng, 0, max_edges - (n - 1));
  return random_connected_graph(rng, n, extra);
}

std::vector<Chain1> fundamental_cycles(const OrientedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::optional<EdgeId>> parent_edge(n);
  std::vector<std::size_t> parent(n), depth(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<char> tree(g.edge_count(), 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    parent[root] = root;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      const std::size_t x = q.front();
      q.pop();
      const VertexId v = g.vertices()[x];
      auto visit = [&](EdgeId e, VertexId w) {
        const std::size_t y = g.index_of(w);
        if (seen[y]) return;
        seen[y] = 1;
        parent[y] = x;
        parent_edge[y] = e;
        depth[y] = depth[x] + 1;
        tree[g.index_of(e)] = 1;
        q.push(y);
      };
      for (EdgeId e : g.out_edges(v)) visit(e, g.edge(e).target);
      for (EdgeId e : g.in_edges(v)) visit(e, g.edge(e).source);
    }
  }
  // Signed tree step from y up to its parent.
  auto up = [&](Chain1& c, std::size_t y, Integer sign) {
    const Edge& e = g.edge(*parent_edge[y]);
    const bool forward = g.index_of(e.source) == y;
    c.add(e.id, forward ? sign : -sign);
  };
  std::vector<Chain1> out;
  for (const Edge& e : g.edges()) {
    if (tree[g.index_of(e.id)]) continue;
    Chain1 c;
    c.add(e.id, 1);
    // Return from t(e) to s(e) through the tree.
    std::size_t a = g.index_of(e.target), b = g.index_of(e.source);
    while (a != b) {
      if (depth[a] >= depth[b]) {
        up(c, a, 1);
        a = parent[a];
      } else {
        up(c, b, -1);
        b = parent[b];
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

Chain1 random_cycle(Rng& rng, const OrientedGraph& g, Integer max_abs) {
  const std::vector<Chain1> basis = fundamental_cycles(g);
  if (basis.empty()) return {};
  for (int attempt = 0; attempt < 64; ++attempt) {
    Chain1 c;
    const std::size_t terms = uniform(rng, 1, std::min<std::size_t>(4, basis.size() + 1));
    for (std::size_t t = 0; t < terms; ++t) {
      const Chain1& b = basis[uniform(rng, 0, basis.size() - 1)];
      c = (rng() & 1) ? c + b : c + (-b);
    }
    const bool small = std::all_of(c.coeffs.begin(), c.coeffs.end(),
                                   [&](const auto& kv) { return std::abs(kv.second) <= max_abs; });
    if (small && !c.is_zero()) return c;
  }
  return basis.front();
}

Chain1 random_chain1(Rng& rng, const OrientedGraph& g, Integer max_abs) {
  Chain1 c;
  std::uniform_int_distribution<Integer> coeff(-max_abs, max_abs);
  for (const Edge& e : g.edges())
    if (rng() % 3 == 0) c.add(e.id, coeff(rng));
  return c;
}

Chain0 random_chain0(Rng& rng, const OrientedGraph& g, Integer max_abs) {
  Chain0 c;
  std::uniform_int_distribution<Integer> coeff(-max_abs, max_abs);
  for (VertexId v : g.vertices())
    if (rng() % 2 == 0) c.add(v, coeff(rng));
  return c;
}

void for_each_connected_graph(std::size_t n, std::size_t max_extra,
                              const std::function<void(const OrientedGraph&)>& f) {
  if (n == 0) return;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  if (pairs.size() > 24) throw PreconditionError("for_each_connected_graph: too many vertices to enumerate");
  std::vector<VertexId> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back(VertexId{static_cast<Integer>(i)});
  const std::size_t max_edges = n - 1 + max_extra;
  std::vector<std::size_t> comp(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    const auto m = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (m + 1 < n || m > max_edges) continue;
    std::iota(comp.begin(), comp.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
      return comp[x] == x ? x : comp[x] = root(comp[x]);
    };
    std::size_t components = n;
    std::vector<EdgeSpec> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (!(mask >> k & 1)) continue;
      const auto [i, j] = pairs[k];
      edges.push_back(EdgeSpec{vertices[i], vertices[j], "e" + std::to_string(edges.size()), std::nullopt});
      const std::size_t a = root(i), b = root(j);
      if (a != b) {
        comp[a] = b;
        --components;
      }
    }
    if (components == 1) f(OrientedGraph(vertices, edges));
  }
}

}  // namespace coarsek
