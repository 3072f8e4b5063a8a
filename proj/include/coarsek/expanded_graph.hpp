#pragma once

#include <map>
#include <optional>
#include <vector>

#include "coarsek/chains.hpp"
#include "coarsek/graph.hpp"
#include "coarsek/operator.hpp"

namespace coarsek {

/// One of the |gamma_e| copies of a base edge. Negative coefficients flip the
/// orientation, so every copy carries multiplicity +1.
struct ExpandedEdge {
  EdgeId parent;
  Integer copy = 1;  // 1-based
  VertexId source;
  VertexId target;
  bool flipped = false;

  SlotId slot() const { return SlotId::copy_edge(parent, copy); }
};

/// The multigraph G obtained from (Gamma, gamma). Edges are sorted by
/// (parent edge id, copy index), which is also the canonical edge numbering.
class ExpandedGraph {
 public:
  ExpandedGraph() = default;
  ExpandedGraph(std::vector<VertexId> vertices, std::vector<ExpandedEdge> edges);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<ExpandedEdge>& edges() const { return edges_; }
  const ExpandedEdge& edge(std::size_t i) const { return edges_[i]; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Positions of the edges entering / leaving x, in canonical order.
  const std::vector<std::size_t>& in(VertexId x) const;
  const std::vector<std::size_t>& out(VertexId x) const;
  Integer inflow(VertexId x) const { return static_cast<Integer>(in(x).size()); }
  Integer outflow(VertexId x) const { return static_cast<Integer>(out(x).size()); }
  /// Distinct edges incident to x.
  std::size_t valence(VertexId x) const;
  std::size_t max_valence() const;
  Integer max_flow() const;

  std::optional<std::size_t> find(const SlotId& slot) const;
  std::vector<SlotId> slots() const;

  /// G as an ordinary oriented multigraph, for metric computations.
  OrientedGraph as_graph() const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<ExpandedEdge> edges_;
  std::map<VertexId, std::vector<std::size_t>> in_;
  std::map<VertexId, std::vector<std::size_t>> out_;
  std::map<SlotId, std::size_t> by_slot_;
};

/// |gamma_e| parallel copies of every edge e, flipped where gamma_e < 0.
ExpandedGraph expand_graph(const OrientedGraph& g, const Chain1& gamma);

/// The constant chain gamma = k on the path [lo, hi] of the integer line.
ExpandedGraph expand_z_line(Integer k, Integer lo, Integer hi);

}  // namespace coarsek
