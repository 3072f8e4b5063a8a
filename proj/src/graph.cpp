#include "coarsek/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace coarsek {

OrientedGraph::OrientedGraph(std::vector<VertexId> vertices, const std::vector<EdgeSpec>& edges,
                             std::map<VertexId, std::string> vertex_labels)
    : vertices_(std::move(vertices)), vertex_labels_(std::move(vertex_labels)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw InputError("duplicate vertex id");
  for (std::size_t i = 0; i < vertices_.size(); ++i) vertex_index_.emplace(vertices_[i], i);
  for (const auto& [v, label] : vertex_labels_)
    if (!has_vertex(v)) throw InputError("label given for unknown vertex " + std::to_string(v.value));

  edges_.reserve(edges.size());
  std::set<std::string> labels;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const EdgeSpec& spec = edges[i];
    Edge e{spec.id.value_or(EdgeId{static_cast<Integer>(i)}), spec.label, spec.source, spec.target};
    if (e.label.empty()) e.label = "e" + std::to_string(e.id.value);
    if (!has_vertex(e.source) || !has_vertex(e.target))
      throw InputError("edge '" + e.label + "' references an unknown vertex");
    if (!labels.insert(e.label).second) throw InputError("duplicate edge id '" + e.label + "'");
    edges_.push_back(std::move(e));
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!edge_index_.emplace(edges_[i].id, i).second)
      throw InputError("duplicate edge id " + std::to_string(edges_[i].id.value));
    out_[vertex_index_.at(edges_[i].source)].push_back(edges_[i].id);
    in_[vertex_index_.at(edges_[i].target)].push_back(edges_[i].id);
  }
}

std::size_t OrientedGraph::index_of(VertexId v) const {
  auto it = vertex_index_.find(v);
  if (it == vertex_index_.end()) throw InputError("unknown vertex " + std::to_string(v.value));
  return it->second;
}

std::size_t OrientedGraph::index_of(EdgeId e) const {
  auto it = edge_index_.find(e);
  if (it == edge_index_.end()) throw InputError("unknown edge " + std::to_string(e.value));
  return it->second;
}

const std::vector<EdgeId>& OrientedGraph::out_edges(VertexId v) const { return out_[index_of(v)]; }
const std::vector<EdgeId>& OrientedGraph::in_edges(VertexId v) const { return in_[index_of(v)]; }

std::size_t OrientedGraph::degree(VertexId v) const {
  std::size_t i = index_of(v);
  std::size_t loops = 0;
  for (EdgeId e : out_[i])
    if (edge(e).target == v) ++loops;
  return out_[i].size() + in_[i].size() - loops;
}

std::size_t OrientedGraph::max_degree() const {
  std::size_t best = 0;
  for (VertexId v : vertices_) best = std::max(best, degree(v));
  return best;
}

std::string OrientedGraph::vertex_label(VertexId v) const {
  auto it = vertex_labels_.find(v);
  return it == vertex_labels_.end() ? std::to_string(v.value) : it->second;
}

std::optional<VertexId> OrientedGraph::find_vertex(const std::string& label) const {
  for (const auto& [v, l] : vertex_labels_)
    if (l == label) return v;
  if (vertex_labels_.empty()) {
    try {
      std::size_t pos = 0;
      Integer value = std::stoll(label, &pos);
      if (pos == label.size() && has_vertex(VertexId{value})) return VertexId{value};
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

std::optional<EdgeId> OrientedGraph::find_edge(const std::string& label) const {
  for (const Edge& e : edges_)
    if (e.label == label) return e.id;
  return std::nullopt;
}

OrientedGraph z_line_graph(Integer lo, Integer hi, Integer edges_per_cell) {
  if (hi < lo) throw PreconditionError("z_line_graph: empty range");
  if (edges_per_cell < 0) throw PreconditionError("z_line_graph: negative edges_per_cell");
  std::vector<VertexId> vertices;
  for (Integer x = lo; x <= hi; ++x) vertices.push_back(VertexId{x});
  std::vector<EdgeSpec> edges;
  for (Integer c = lo; c < hi; ++c) {
    for (Integer j = 0; j < edges_per_cell; ++j) {
      Integer id = edges_per_cell == 1 ? c : c * edges_per_cell + j;
      std::string label = "[" + std::to_string(c) + "," + std::to_string(c + 1) + "]";
      if (edges_per_cell > 1) label += "#" + std::to_string(j);
      edges.push_back(EdgeSpec{VertexId{c}, VertexId{c + 1}, label, EdgeId{id}});
    }
  }
  return OrientedGraph(std::move(vertices), edges);
}

FiniteMetricSpace::FiniteMetricSpace(std::vector<VertexId> points, std::vector<std::vector<Integer>> dist)
    : points_(std::move(points)), dist_(std::move(dist)) {
  if (dist_.size() != points_.size()) throw InputError("distance matrix size mismatch");
  for (const auto& row : dist_)
    if (row.size() != points_.size()) throw InputError("distance matrix is not square");
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (!index_.emplace(points_[i], i).second) throw InputError("duplicate point in metric space");
}

Integer FiniteMetricSpace::distance(VertexId x, VertexId y) const {
  auto ix = index_.find(x);
  auto iy = index_.find(y);
  if (ix == index_.end() || iy == index_.end())
    throw PreconditionError("metric does not cover vertex");
  return dist_[ix->second][iy->second];
}

Integer distance(const Metric& m, VertexId x, VertexId y) {
  if (const auto* finite = std::get_if<FiniteMetricSpace>(&m)) return finite->distance(x, y);
  return x.value > y.value ? x.value - y.value : y.value - x.value;
}

FiniteMetricSpace graph_metric(const OrientedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const Edge& e : g.edges()) {
    std::size_t s = g.index_of(e.source);
    std::size_t t = g.index_of(e.target);
    if (s == t) continue;
    adj[s].push_back(t);
    adj[t].push_back(s);
  }
  std::vector<std::vector<Integer>> dist(n, std::vector<Integer>(n, FiniteMetricSpace::kUnreachable));
  for (std::size_t src = 0; src < n; ++src) {
    auto& row = dist[src];
    row[src] = 0;
    std::deque<std::size_t> queue{src};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t w : adj[u]) {
        if (row[w] != FiniteMetricSpace::kUnreachable) continue;
        row[w] = row[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return FiniteMetricSpace(g.vertices(), std::move(dist));
}

OrientedGraph rips_graph(const FiniteMetricSpace& m, Rational alpha) {
  if (alpha <= 0) throw PreconditionError("rips_graph: alpha must be positive");
  std::vector<VertexId> points = m.points();
  std::sort(points.begin(), points.end());
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      Integer d = m.distance(points[i], points[j]);
      if (d == FiniteMetricSpace::kUnreachable || d <= 0) continue;
      if (Rational(d) <= alpha) {
        edges.push_back(EdgeSpec{points[i], points[j],
                                 "r" + std::to_string(points[i].value) + "_" + std::to_string(points[j].value),
                                 std::nullopt});
      }
    }
  }
  return OrientedGraph(std::move(points), edges);
}

Integer check_bounded_geometry(const OrientedGraph& g, Integer r) {
  if (r < 0) throw PreconditionError("check_bounded_geometry: negative radius");
  FiniteMetricSpace m = graph_metric(g);
  std::size_t largest = 0;
  for (const auto& row : m.matrix()) {
    auto count = static_cast<std::size_t>(
        std::count_if(row.begin(), row.end(), [r](Integer d) { return d <= r; }));
    largest = std::max(largest, count);
  }
  return static_cast<Integer>(largest) + 1;
}

Integer check_bounded_geometry(const BandedZGraph& g, Integer r) {
  if (r < 0) throw PreconditionError("check_bounded_geometry: negative radius");
  if (g.edges_per_cell < 0) throw PreconditionError("negative edges_per_cell");
  // Periodic part: a ball in the line graph is an interval of 2r+1 points.
  Integer periodic = g.edges_per_cell > 0 ? 2 * r + 1 : 1;
  if (g.extra_edges.empty()) return periodic + 1;

  // Extra edges: every ball meeting them lies in a padded window that
  // contains all shortest paths between its points.
  Integer lo = std::numeric_limits<Integer>::max();
  Integer hi = std::numeric_limits<Integer>::min();
  for (const EdgeSpec& e : g.extra_edges) {
    lo = std::min({lo, e.source.value, e.target.value});
    hi = std::max({hi, e.source.value, e.target.value});
  }
  Integer pad = 2 * r + (hi - lo) + 1;
  OrientedGraph base = z_line_graph(lo - pad, hi + pad, g.edges_per_cell);
  std::vector<EdgeSpec> edges;
  for (const Edge& e : base.edges()) edges.push_back(EdgeSpec{e.source, e.target, e.label, e.id});
  Integer next_id = std::numeric_limits<Integer>::min() / 2;
  for (const EdgeSpec& e : g.extra_edges) {
    EdgeSpec copy = e;
    copy.id = EdgeId{next_id++};
    if (copy.label.empty()) copy.label = "extra" + std::to_string(next_id);
    edges.push_back(copy);
  }
  OrientedGraph window(base.vertices(), edges);
  FiniteMetricSpace m = graph_metric(window);
  std::size_t largest = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    Integer x = m.points()[i].value;
    if (x < lo - r || x > hi + r) continue;
    const auto& row = m.matrix()[i];
    largest = std::max(largest, static_cast<std::size_t>(std::count_if(
                                    row.begin(), row.end(), [r](Integer d) { return d <= r; })));
  }
  return std::max(periodic, static_cast<Integer>(largest)) + 1;
}

}  // namespace coarsek
