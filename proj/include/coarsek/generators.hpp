#pragma once

#include <functional>
#include <random>
#include <vector>

#include "coarsek/chains.hpp"
#include "coarsek/graph.hpp"

namespace coarsek {

using Rng = std::mt19937_64;

/// Connected oriented graph on vertices 0..n-1: a random spanning tree plus
/// `extra` random non-loop edges (parallel edges allowed), random orientations.
OrientedGraph random_connected_graph(Rng& rng, std::size_t n, std::size_t extra);
/// Vertex count in [2, max_vertices], edge count at most max_edges.
OrientedGraph random_graph_within(Rng& rng, std::size_t max_vertices, std::size_t max_edges);

/// One signed cycle per edge outside a BFS spanning forest.
std::vector<Chain1> fundamental_cycles(const OrientedGraph& g);

/// Sum of a few fundamental cycles with signs, all coefficients in [-max_abs, max_abs].
/// Returns the zero chain on forests.
Chain1 random_cycle(Rng& rng, const OrientedGraph& g, Integer max_abs = 3);
Chain1 random_chain1(Rng& rng, const OrientedGraph& g, Integer max_abs = 3);
Chain0 random_chain0(Rng& rng, const OrientedGraph& g, Integer max_abs = 3);

/// Calls f on every connected simple graph with vertex set 0..n-1 whose edge
/// set is a subset of the complete graph with at most n - 1 + max_extra edges.
/// Each edge {i < j} is oriented i -> j.
void for_each_connected_graph(std::size_t n, std::size_t max_extra, const std::function<void(const OrientedGraph&)>& f);

}  // namespace coarsek
