#include "doctest.h"

#include "coarsek/graph.hpp"

using namespace coarsek;

namespace {

OrientedGraph complete_graph(Integer n) {
  std::vector<VertexId> vs;
  std::vector<EdgeSpec> es;
  for (Integer i = 0; i < n; ++i) vs.push_back({i});
  for (Integer i = 0; i < n; ++i)
    for (Integer j = i + 1; j < n; ++j) es.push_back({{i}, {j}, {}, {}});
  return OrientedGraph(vs, es);
}

OrientedGraph path_graph(Integer n) {
  std::vector<VertexId> vs;
  std::vector<EdgeSpec> es;
  for (Integer i = 0; i < n; ++i) vs.push_back({i});
  for (Integer i = 0; i + 1 < n; ++i) es.push_back({{i}, {i + 1}, {}, {}});
  return OrientedGraph(vs, es);
}

}  // namespace

TEST_CASE("edges are indexed by position and adjacency lists are sorted") {
  const OrientedGraph g({{0}, {1}, {2}}, {{{0}, {1}, "a", {}}, {{1}, {2}, "b", {}}, {{0}, {2}, "c", {}}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.edge(EdgeId{1}).label == "b");
  CHECK(g.out_edges(VertexId{0}) == std::vector<EdgeId>{{0}, {2}});
  CHECK(g.in_edges(VertexId{2}) == std::vector<EdgeId>{{1}, {2}});
  CHECK(g.find_edge("c") == EdgeId{2});
  CHECK_FALSE(g.find_edge("z").has_value());
  CHECK(g.degree(VertexId{1}) == 2);
}

TEST_CASE("loops count once toward the degree") {
  const OrientedGraph g({{0}, {1}}, {{{0}, {0}, {}, {}}, {{0}, {1}, {}, {}}});
  CHECK(g.degree(VertexId{0}) == 2);
  CHECK(g.max_degree() == 2);
}

TEST_CASE("unknown endpoints and duplicate ids are rejected") {
  CHECK_THROWS_AS(OrientedGraph({{0}}, {{{0}, {5}, {}, {}}}), InputError);
  CHECK_THROWS_AS(OrientedGraph({{0}, {0}}, {}), InputError);
  CHECK_THROWS_AS(OrientedGraph({{0}, {1}}, {{{0}, {1}, {}, EdgeId{3}}, {{1}, {0}, {}, EdgeId{3}}}), InputError);
}

TEST_CASE("graph metric on a path and on disconnected graphs") {
  const FiniteMetricSpace m = graph_metric(path_graph(5));
  CHECK(m.distance({0}, {4}) == 4);
  CHECK(m.distance({3}, {1}) == 2);
  CHECK(m.distance({2}, {2}) == 0);
  const OrientedGraph two({{0}, {1}}, {});
  CHECK(graph_metric(two).distance({0}, {1}) == FiniteMetricSpace::kUnreachable);
  CHECK(distance(Metric{LineMetric{}}, {-3}, {4}) == 7);
}

TEST_CASE("edge orientation does not affect the metric") {
  const OrientedGraph g({{0}, {1}, {2}}, {{{1}, {0}, {}, {}}, {{2}, {1}, {}, {}}});
  CHECK(graph_metric(g).distance({0}, {2}) == 2);
}

TEST_CASE("bounded geometry constants") {
  CHECK(check_bounded_geometry(BandedZGraph{}, 1) == 4);
  CHECK(check_bounded_geometry(BandedZGraph{}, 3) == 8);
  CHECK(check_bounded_geometry(complete_graph(5), 1) == 6);
  CHECK(check_bounded_geometry(OrientedGraph({{0}}, {}), 1) == 2);
  CHECK(check_bounded_geometry(path_graph(6), 1) == 4);
  CHECK(check_bounded_geometry(path_graph(6), 0) == 2);
}

TEST_CASE("Rips graphs at several scales") {
  const FiniteMetricSpace m = graph_metric(path_graph(4));
  CHECK(rips_graph(m, Rational(1)).edge_count() == 3);
  CHECK(rips_graph(m, Rational(2)).edge_count() == 5);
  CHECK(rips_graph(m, Rational(1, 2)).edge_count() == 0);
  CHECK(rips_graph(m, Rational(3)).edge_count() == 6);
  const OrientedGraph r = rips_graph(m, Rational(2));
  for (const Edge& e : r.edges()) CHECK(e.source < e.target);
}

TEST_CASE("z_line_graph numbers cells by their left endpoint") {
  const OrientedGraph g = z_line_graph(-2, 2);
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 4);
  CHECK(g.edge(EdgeId{-2}).source == VertexId{-2});
  CHECK(g.edge(EdgeId{1}).target == VertexId{2});
  CHECK(z_line_graph(0, 3, 2).edge_count() == 6);
}
