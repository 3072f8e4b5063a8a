#include "doctest.h"

#include "coarsek/io.hpp"
#include "coarsek/report.hpp"

using namespace coarsek;

namespace {

const char* kTriangle = R"({"kind": "finite", "vertices": ["a", "b", "c"],
  "edges": [{"id": "ab", "source": "a", "target": "b"},
            {"id": "bc", "source": "b", "target": "c"},
            {"id": "ca", "source": "c", "target": "a"}]})";

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("labelled finite graphs") {
  const GraphSpec spec = parse_graph_text(kTriangle);
  const auto& g = std::get<OrientedGraph>(spec);
  CHECK(g.vertex_count() == 3);
  CHECK(g.find_vertex("b") == VertexId{1});
  CHECK(g.edge(*g.find_edge("ca")).target == VertexId{0});
  const GraphSpec again = parse_graph(graph_to_json(spec));
  CHECK(graph_to_json(again) == graph_to_json(spec));
}

TEST_CASE("integer vertices and edge ids are used as given") {
  const GraphSpec spec = parse_graph_text(
      R"({"kind": "finite", "vertices": [10, -3], "edges": [{"id": 7, "source": 10, "target": -3}]})");
  const auto& g = std::get<OrientedGraph>(spec);
  CHECK(g.has_vertex(VertexId{-3}));
  CHECK(g.edge(EdgeId{7}).source == VertexId{10});
  CHECK_FALSE(g.has_vertex_labels());
}

TEST_CASE("edges without ids are numbered by position") {
  const auto g = std::get<OrientedGraph>(
      parse_graph_text(R"({"kind": "finite", "vertices": [0, 1], "edges": [{"source": 0, "target": 1}]})"));
  CHECK(g.find_edge("e0") == EdgeId{0});
}

TEST_CASE("banded graphs") {
  const auto z = std::get<BandedZGraph>(parse_graph_text(R"({"kind": "banded_z", "edges_per_cell": 1})"));
  CHECK(z.is_cayley_line());
  const auto p = std::get<BandedZGraph>(parse_graph_text(
      R"({"kind": "banded_z", "edges_per_cell": 0, "perturbation": {"edges": [{"source": 0, "target": 3}]}})"));
  CHECK(p.extra_edges.size() == 1);
  CHECK_FALSE(p.is_edgeless());
  CHECK(graph_to_json(p)["perturbation"]["edges"][0]["target"] == 3);
}

TEST_CASE("graph errors name the offending field") {
  CHECK(contains(message_of([] { parse_graph_text("{\"kind\": ", "g.json"); }), "g.json: byte"));
  CHECK(contains(message_of([] { parse_graph_text(R"({"kind": "finite"})"); }), "missing field 'vertices'"));
  CHECK(contains(message_of([] { parse_graph_text(R"({"kind": "torus"})"); }), "graph/kind"));
  CHECK(contains(message_of([] {
                   parse_graph_text(R"({"kind": "finite", "vertices": [0], "edges": [{"source": 0, "target": 4}]})");
                 }),
                 "graph/edges/0/target"));
  CHECK(contains(message_of([] {
                   parse_graph_text(R"({"kind": "finite", "vertices": [0, 1],
                     "edges": [{"id": 1, "source": 0, "target": 1}, {"id": "x", "source": 0, "target": 1}]})");
                 }),
                 "all integers or all strings"));
  CHECK(contains(message_of([] { parse_graph_text(R"({"kind": "banded_z", "edges_per_cell": -1})"); }),
                 "graph/edges_per_cell"));
  CHECK(contains(message_of([] { load_graph("/nonexistent/graph.json"); }), "cannot open"));
}

TEST_CASE("finite chains by label") {
  const GraphSpec spec = parse_graph_text(kTriangle);
  const auto& g = std::get<OrientedGraph>(spec);
  const auto c1 = std::get<Chain1>(parse_chain_text(R"({"degree": 1, "coeffs": {"ab": 2, "ca": -1}})", spec));
  CHECK(c1.at(EdgeId{0}) == 2);
  CHECK(c1.at(EdgeId{2}) == -1);
  CHECK(std::get<Chain1>(parse_chain(chain_to_json(c1, g), spec)) == c1);
  const auto c0 = std::get<Chain0>(parse_chain_text(R"({"degree": 0, "coeffs": {"c": 4}})", spec));
  CHECK(c0.at(VertexId{2}) == 4);
  CHECK(std::get<Chain0>(parse_chain(chain_to_json(c0, g), spec)) == c0);
  CHECK(contains(message_of([&] { parse_chain_text(R"({"degree": 1, "coeffs": {"zz": 1}})", spec); }),
                 "chain/coeffs/zz"));
  CHECK(contains(message_of([&] { parse_chain_text(R"({"degree": 2, "coeffs": {}})", spec); }), "chain/degree"));
  CHECK(contains(message_of([&] { parse_chain_text(R"({"degree": 0, "coeffs": {"a": 1.5}})", spec); }),
                 "expected an integer"));
}

TEST_CASE("chains on the line") {
  const GraphSpec z = BandedZGraph{};
  const auto step = std::get<BandedZChain>(
      parse_chain_text(R"({"degree": 0, "tail_left": 0, "tail_right": 1, "window_start": 0, "window_values": []})", z));
  CHECK(step.at(5) == 1);
  CHECK(step.at(-5) == 0);
  const auto fin = std::get<BandedZChain>(parse_chain_text(R"({"degree": 0, "coeffs": {"-2": 3, "1": -1}})", z));
  CHECK(fin.has_finite_support());
  CHECK(fin.at(-2) == 3);
  CHECK(fin.at(0) == 0);
  CHECK(fin.at(1) == -1);
  CHECK(same_sequence(banded_from_json(chain_to_json(step)), step));
  CHECK(contains(message_of([&] { parse_chain_text(R"({"degree": 0, "coeffs": {"x": 1}})", z); }),
                 "chain/coeffs/x"));
  CHECK_THROWS_AS(
      parse_chain_text(R"({"degree": 0, "tail_left": 0, "tail_right": 0})", parse_graph_text(kTriangle)), InputError);
}

TEST_CASE("alpha overrides") {
  const GraphSpec spec = parse_graph_text(kTriangle);
  const auto& g = std::get<OrientedGraph>(spec);
  const AlphaOverrides o = parse_alpha_overrides(
      Json::parse(R"({"overrides": [{"vertex": "a", "pairs": [[{"edge": "ca"}, "E0.1"]]}]})"), g);
  REQUIRE(o.contains(VertexId{0}));
  CHECK(o.at(VertexId{0}).front() == std::pair{SlotId::copy_edge(EdgeId{2}, 1), SlotId::copy_edge(EdgeId{0}, 1)});
  CHECK(contains(message_of([&] {
                   parse_alpha_overrides(Json::parse(R"({"overrides": [{"vertex": "a", "pairs": [["bad", "E0.1"]]}]})"),
                                         g);
                 }),
                 "alpha/overrides/0/pairs/0/0"));
}

TEST_CASE("operators round-trip through JSON") {
  const BasisPtr b = Basis::product({{-1}, {2}}, {SlotId::ordinal(1), SlotId::copy_edge(EdgeId{4}, 2)});
  const auto a = SparseBlockOperator::from_indexed(b, {{0, 3, 5}, {2, 1, -1}});
  const SparseBlockOperator back = operator_from_json(Json::parse(operator_to_json(a).dump()));
  CHECK(back == a);
  CHECK_THROWS_AS(basis_from_json(Json::parse(R"([[0, "O1"], [0, "O1"]])")), InputError);
  CHECK_THROWS_AS(basis_from_json(Json::parse(R"([[0, "Q1"]])")), InputError);
}

TEST_CASE("reports round-trip and reject duplicate checks") {
  Report r;
  r.title = "demo";
  r.add("first", true, "ok");
  r.add("second", false, "bad", "vertex 3");
  r.certificates["H0"] = "Z";
  r.dumps["U"] = "0 O1 0 O1 1\n";
  CHECK_FALSE(r.passed());
  CHECK(r.find("second")->locus == "vertex 3");
  CHECK(r.find("third") == nullptr);
  CHECK_THROWS(r.add("first", true));
  const Json j = r.to_json();
  CHECK(j["status"] == "fail");
  CHECK(Report::from_json(j) == r);
  CHECK(contains(r.render_text(), "second"));
}
