#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "coarsek/chains.hpp"
#include "coarsek/graph.hpp"
#include "coarsek/operator.hpp"

namespace coarsek {

using Json = nlohmann::json;

/// Parse errors carry a JSON pointer (or byte offset) to the offending spot.
GraphSpec parse_graph(const Json& j);
GraphSpec parse_graph_text(const std::string& text, const std::string& origin = "<graph>");
GraphSpec load_graph(const std::string& path);
Json graph_to_json(const GraphSpec& g);

using ChainValue = std::variant<Chain0, Chain1, BandedZChain>;

/// Finite graphs take {"degree", "coeffs"}; the integer line additionally
/// takes the banded form {"degree", "tail_left", "tail_right", "window_start",
/// "window_values"}, and reads "coeffs" as a finite-support banded chain.
ChainValue parse_chain(const Json& j, const GraphSpec& host);
ChainValue parse_chain_text(const std::string& text, const GraphSpec& host, const std::string& origin = "<chain>");
ChainValue load_chain(const std::string& path, const GraphSpec& host);
Json chain_to_json(const Chain0& c, const OrientedGraph& g);
Json chain_to_json(const Chain1& c, const OrientedGraph& g);
Json chain_to_json(const BandedZChain& c);
BandedZChain banded_from_json(const Json& j);

/// {"overrides": [{"vertex": v, "pairs": [[in, out], ...]}]}, where a slot is
/// either "E<edge id>.<copy>" or {"edge": label, "copy": n}.
using AlphaOverrides = std::map<VertexId, std::vector<std::pair<SlotId, SlotId>>>;
AlphaOverrides parse_alpha_overrides(const Json& j, const OrientedGraph& g);
AlphaOverrides load_alpha_overrides(const std::string& path, const OrientedGraph& g);

Json basis_to_json(const Basis& b);
BasisPtr basis_from_json(const Json& j);
/// {"basis": [...], "entries": [[row, col, value], ...]} with indices into basis.
Json operator_to_json(const SparseBlockOperator& a);
SparseBlockOperator operator_from_json(const Json& j);

std::string read_file(const std::string& path);

}  // namespace coarsek
