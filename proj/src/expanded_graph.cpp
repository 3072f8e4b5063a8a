#include "coarsek/expanded_graph.hpp"

#include <algorithm>
#include <cstdlib>

namespace coarsek {

namespace {
const std::vector<std::size_t> kNone;
}

ExpandedGraph::ExpandedGraph(std::vector<VertexId> vertices, std::vector<ExpandedEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  std::sort(edges_.begin(), edges_.end(), [](const ExpandedEdge& a, const ExpandedEdge& b) {
    return std::tie(a.parent, a.copy) < std::tie(b.parent, b.copy);
  });
  for (VertexId v : vertices_) {
    in_[v];
    out_[v];
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const ExpandedEdge& e = edges_[i];
    if (!in_.contains(e.target) || !out_.contains(e.source))
      throw PreconditionError("expanded edge references a vertex outside the graph");
    in_[e.target].push_back(i);
    out_[e.source].push_back(i);
    if (!by_slot_.emplace(e.slot(), i).second) throw PreconditionError("duplicate expanded edge");
  }
}

const std::vector<std::size_t>& ExpandedGraph::in(VertexId x) const {
  auto it = in_.find(x);
  return it == in_.end() ? kNone : it->second;
}

const std::vector<std::size_t>& ExpandedGraph::out(VertexId x) const {
  auto it = out_.find(x);
  return it == out_.end() ? kNone : it->second;
}

std::size_t ExpandedGraph::valence(VertexId x) const {
  std::size_t loops = 0;
  for (std::size_t e : out(x))
    if (edges_[e].target == x) ++loops;
  return in(x).size() + out(x).size() - loops;
}

std::size_t ExpandedGraph::max_valence() const {
  std::size_t best = 0;
  for (VertexId v : vertices_) best = std::max(best, valence(v));
  return best;
}

Integer ExpandedGraph::max_flow() const {
  Integer best = 0;
  for (VertexId v : vertices_) best = std::max({best, inflow(v), outflow(v)});
  return best;
}

std::optional<std::size_t> ExpandedGraph::find(const SlotId& slot) const {
  auto it = by_slot_.find(slot);
  if (it == by_slot_.end()) return std::nullopt;
  return it->second;
}

std::vector<SlotId> ExpandedGraph::slots() const {
  std::vector<SlotId> out;
  out.reserve(edges_.size());
  for (const ExpandedEdge& e : edges_) out.push_back(e.slot());
  return out;
}

OrientedGraph ExpandedGraph::as_graph() const {
  std::vector<EdgeSpec> specs;
  specs.reserve(edges_.size());
  for (const ExpandedEdge& e : edges_)
    specs.push_back(EdgeSpec{e.source, e.target, e.slot().to_string(), std::nullopt});
  return OrientedGraph(vertices_, specs);
}

ExpandedGraph expand_graph(const OrientedGraph& g, const Chain1& gamma) {
  std::vector<ExpandedEdge> edges;
  for (const auto& [id, c] : gamma.coeffs) {
    if (!g.has_edge(id)) throw PreconditionError("expand_graph: chain uses an edge outside the graph");
    const Edge& e = g.edge(id);
    const bool flipped = c < 0;
    for (Integer j = 1; j <= std::abs(c); ++j)
      edges.push_back(ExpandedEdge{id, j, flipped ? e.target : e.source, flipped ? e.source : e.target, flipped});
  }
  return ExpandedGraph(g.vertices(), std::move(edges));
}

ExpandedGraph expand_z_line(Integer k, Integer lo, Integer hi) {
  const OrientedGraph line = z_line_graph(lo, hi);
  Chain1 gamma;
  for (const Edge& e : line.edges()) gamma.add(e.id, k);
  return expand_graph(line, gamma);
}

}  // namespace coarsek
