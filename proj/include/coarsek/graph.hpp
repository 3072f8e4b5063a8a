#pragma once

#include <boost/rational.hpp>

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "coarsek/types.hpp"

namespace coarsek {

using Rational = boost::rational<Integer>;

struct Edge {
  EdgeId id;
  std::string label;
  VertexId source;
  VertexId target;
};

/// Input record for building a graph. A missing id means "position in list".
struct EdgeSpec {
  VertexId source;
  VertexId target;
  std::string label;
  std::optional<EdgeId> id;
};

/// Finite oriented (multi)graph. Vertices are kept sorted; edges are kept
/// sorted by id. Immutable once built.
class OrientedGraph {
 public:
  OrientedGraph() = default;
  OrientedGraph(std::vector<VertexId> vertices, const std::vector<EdgeSpec>& edges,
                std::map<VertexId, std::string> vertex_labels = {});

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(VertexId v) const { return vertex_index_.contains(v); }
  bool has_edge(EdgeId e) const { return edge_index_.contains(e); }
  std::size_t index_of(VertexId v) const;
  std::size_t index_of(EdgeId e) const;
  const Edge& edge(EdgeId e) const { return edges_[index_of(e)]; }

  /// Edges leaving / entering v, sorted by id.
  const std::vector<EdgeId>& out_edges(VertexId v) const;
  const std::vector<EdgeId>& in_edges(VertexId v) const;
  /// Number of distinct edges incident to v (a loop counts once).
  std::size_t degree(VertexId v) const;
  std::size_t max_degree() const;

  std::string vertex_label(VertexId v) const;
  std::optional<VertexId> find_vertex(const std::string& label) const;
  std::optional<EdgeId> find_edge(const std::string& label) const;
  bool has_vertex_labels() const { return !vertex_labels_.empty(); }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::map<VertexId, std::string> vertex_labels_;
  std::unordered_map<VertexId, std::size_t> vertex_index_;
  std::unordered_map<EdgeId, std::size_t> edge_index_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

/// The integer line with `edges_per_cell` parallel edges [n, n+1] per cell
/// (0 gives the edgeless line), plus finitely many extra edges.
struct BandedZGraph {
  Integer edges_per_cell = 1;
  std::vector<EdgeSpec> extra_edges;

  bool is_cayley_line() const { return edges_per_cell == 1 && extra_edges.empty(); }
  bool is_edgeless() const { return edges_per_cell == 0 && extra_edges.empty(); }
};

using GraphSpec = std::variant<OrientedGraph, BandedZGraph>;

/// Finite path graph on [lo, hi] with `edges_per_cell` parallel edges per cell;
/// the edge [c, c+1] gets id c (copies j > 0 of a cell get separate ids
/// c * edges_per_cell + j so the ids stay unique).
OrientedGraph z_line_graph(Integer lo, Integer hi, Integer edges_per_cell = 1);

class FiniteMetricSpace {
 public:
  static constexpr Integer kUnreachable = std::numeric_limits<Integer>::max();

  FiniteMetricSpace() = default;
  FiniteMetricSpace(std::vector<VertexId> points, std::vector<std::vector<Integer>> dist);

  const std::vector<VertexId>& points() const { return points_; }
  const std::vector<std::vector<Integer>>& matrix() const { return dist_; }
  std::size_t size() const { return points_.size(); }
  bool contains(VertexId v) const { return index_.contains(v); }
  Integer distance(VertexId x, VertexId y) const;

 private:
  std::vector<VertexId> points_;
  std::vector<std::vector<Integer>> dist_;
  std::unordered_map<VertexId, std::size_t> index_;
};

/// Standard metric |x - y| on the integer line.
struct LineMetric {};

using Metric = std::variant<FiniteMetricSpace, LineMetric>;

Integer distance(const Metric& m, VertexId x, VertexId y);

/// Unweighted shortest-path distances, edges taken as undirected unit segments.
FiniteMetricSpace graph_metric(const OrientedGraph& g);

/// One edge per unordered pair with 0 < d <= alpha, oriented from the lower vertex id.
OrientedGraph rips_graph(const FiniteMetricSpace& m, Rational alpha);

/// Least K such that every closed ball of radius r has fewer than K points.
Integer check_bounded_geometry(const OrientedGraph& g, Integer r);
Integer check_bounded_geometry(const BandedZGraph& g, Integer r);

}  // namespace coarsek
