#include "coarsek/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace coarsek {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

Integer as_integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<Integer>();
}

std::string key_text(const Json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<Integer>());
  fail(where, "expected a string or integer identifier");
}

Json parse_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(origin, "byte " + std::to_string(e.byte) + ": malformed JSON");
  }
}

OrientedGraph parse_finite(const Json& j) {
  const Json& vs = require(j, "vertices", "graph");
  if (!vs.is_array()) fail("graph/vertices", "expected an array");
  const bool numeric = std::all_of(vs.begin(), vs.end(), [](const Json& v) { return v.is_number_integer(); });

  std::vector<VertexId> vertices;
  std::map<VertexId, std::string> labels;
  std::map<std::string, VertexId> by_label;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string where = "graph/vertices/" + std::to_string(i);
    const VertexId v = numeric ? VertexId{vs[i].get<Integer>()} : VertexId{static_cast<Integer>(i)};
    const std::string label = key_text(vs[i], where);
    if (!by_label.emplace(label, v).second) fail(where, "duplicate vertex '" + label + "'");
    vertices.push_back(v);
    if (!numeric) labels.emplace(v, label);
  }

  std::vector<EdgeSpec> edges;
  if (j.contains("edges")) {
    const Json& es = j.at("edges");
    if (!es.is_array()) fail("graph/edges", "expected an array");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string where = "graph/edges/" + std::to_string(i);
      auto endpoint = [&](const char* key) {
        const std::string name = key_text(require(es[i], key, where), where + "/" + key);
        auto it = by_label.find(name);
        if (it == by_label.end()) fail(where + "/" + key, "unknown vertex '" + name + "'");
        return it->second;
      };
      EdgeSpec spec{endpoint("source"), endpoint("target"), "", std::nullopt};
      if (es[i].contains("id")) {
        const Json& id = es[i].at("id");
        spec.label = key_text(id, where + "/id");
        if (id.is_number_integer()) spec.id = EdgeId{id.get<Integer>()};
      } else {
        spec.label = "e" + std::to_string(i);
      }
      if (!seen.insert(spec.label).second) fail(where + "/id", "duplicate edge id '" + spec.label + "'");
      edges.push_back(std::move(spec));
    }
    // Positional ids only when no edge names an explicit integer id.
    const bool any_integer = std::any_of(edges.begin(), edges.end(), [](const EdgeSpec& e) { return e.id.has_value(); });
    const bool all_integer = std::all_of(edges.begin(), edges.end(), [](const EdgeSpec& e) { return e.id.has_value(); });
    if (any_integer && !all_integer) fail("graph/edges", "edge ids must be all integers or all strings");
  }
  try {
    return OrientedGraph(std::move(vertices), edges, std::move(labels));
  } catch (const InputError& e) {
    fail("graph", e.what());
  }
}

BandedZGraph parse_banded(const Json& j) {
  BandedZGraph g;
  g.edges_per_cell = as_integer(require(j, "edges_per_cell", "graph"), "graph/edges_per_cell");
  if (g.edges_per_cell < 0) fail("graph/edges_per_cell", "must be nonnegative");
  auto it = j.find("perturbation");
  if (it != j.end() && !it->is_null()) {
    const Json& es = require(*it, "edges", "graph/perturbation");
    if (!es.is_array()) fail("graph/perturbation/edges", "expected an array");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string where = "graph/perturbation/edges/" + std::to_string(i);
      EdgeSpec spec{VertexId{as_integer(require(es[i], "source", where), where + "/source")},
                    VertexId{as_integer(require(es[i], "target", where), where + "/target")},
                    es[i].contains("id") ? key_text(es[i].at("id"), where + "/id") : "x" + std::to_string(i),
                    std::nullopt};
      g.extra_edges.push_back(std::move(spec));
    }
  }
  return g;
}

Integer resolve_vertex(const OrientedGraph& g, const std::string& key, const std::string& where) {
  auto v = g.find_vertex(key);
  if (!v) fail(where, "unknown vertex '" + key + "'");
  return v->value;
}

Integer resolve_edge(const OrientedGraph& g, const std::string& key, const std::string& where) {
  if (auto e = g.find_edge(key)) return e->value;
  fail(where, "unknown edge '" + key + "'");
}

int parse_degree(const Json& j) {
  const Integer d = as_integer(require(j, "degree", "chain"), "chain/degree");
  if (d != 0 && d != 1) fail("chain/degree", "must be 0 or 1");
  return static_cast<int>(d);
}

Integer parse_key_integer(const std::string& key, const std::string& where) {
  try {
    std::size_t used = 0;
    const Integer v = std::stoll(key, &used);
    if (used == key.size()) return v;
  } catch (const std::exception&) {
  }
  fail(where, "expected an integer position, got '" + key + "'");
}

std::string edge_key(const OrientedGraph& g, EdgeId e) { return g.edge(e).label; }

std::string vertex_key(const OrientedGraph& g, VertexId v) { return g.vertex_label(v); }

SlotId parse_slot(const Json& j, const OrientedGraph& g, const std::string& where) {
  if (j.is_string()) {
    try {
      return SlotId::parse(j.get<std::string>());
    } catch (const InputError& e) {
      fail(where, e.what());
    }
  }
  const std::string label = key_text(require(j, "edge", where), where + "/edge");
  const Integer copy = j.contains("copy") ? as_integer(j.at("copy"), where + "/copy") : 1;
  return SlotId::copy_edge(EdgeId{resolve_edge(g, label, where + "/edge")}, copy);
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GraphSpec parse_graph(const Json& j) {
  const Json& kind = require(j, "kind", "graph");
  if (!kind.is_string()) fail("graph/kind", "expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "finite") return parse_finite(j);
  if (k == "banded_z") return parse_banded(j);
  fail("graph/kind", "unknown kind '" + k + "'");
}

GraphSpec parse_graph_text(const std::string& text, const std::string& origin) {
  try {
    return parse_graph(parse_text(text, origin));
  } catch (const InputError& e) {
    if (std::string(e.what()).rfind(origin, 0) == 0) throw;
    throw InputError(origin + ": " + e.what());
  }
}

GraphSpec load_graph(const std::string& path) { return parse_graph_text(read_file(path), path); }

Json graph_to_json(const GraphSpec& spec) {
  if (const auto* b = std::get_if<BandedZGraph>(&spec)) {
    Json j{{"kind", "banded_z"}, {"edges_per_cell", b->edges_per_cell}, {"perturbation", nullptr}};
    if (!b->extra_edges.empty()) {
      Json es = Json::array();
      for (const EdgeSpec& e : b->extra_edges)
        es.push_back({{"id", e.label}, {"source", e.source.value}, {"target", e.target.value}});
      j["perturbation"] = {{"edges", es}};
    }
    return j;
  }
  const auto& g = std::get<OrientedGraph>(spec);
  Json vs = Json::array();
  for (VertexId v : g.vertices()) {
    if (g.has_vertex_labels())
      vs.push_back(g.vertex_label(v));
    else
      vs.push_back(v.value);
  }
  Json es = Json::array();
  for (const Edge& e : g.edges()) {
    auto endpoint = [&](VertexId v) -> Json {
      if (g.has_vertex_labels()) return g.vertex_label(v);
      return v.value;
    };
    es.push_back({{"id", e.label}, {"source", endpoint(e.source)}, {"target", endpoint(e.target)}});
  }
  return Json{{"kind", "finite"}, {"vertices", vs}, {"edges", es}};
}

BandedZChain banded_from_json(const Json& j) {
  BandedZChain c;
  c.degree = parse_degree(j);
  c.tail_left = as_integer(require(j, "tail_left", "chain"), "chain/tail_left");
  c.tail_right = as_integer(require(j, "tail_right", "chain"), "chain/tail_right");
  c.window_start = j.contains("window_start") ? as_integer(j.at("window_start"), "chain/window_start") : 0;
  if (j.contains("window_values")) {
    const Json& wv = j.at("window_values");
    if (!wv.is_array()) fail("chain/window_values", "expected an array");
    for (std::size_t i = 0; i < wv.size(); ++i)
      c.window_values.push_back(as_integer(wv[i], "chain/window_values/" + std::to_string(i)));
  }
  return c;
}

ChainValue parse_chain(const Json& j, const GraphSpec& host) {
  const int degree = parse_degree(j);
  if (std::holds_alternative<BandedZGraph>(host)) {
    if (!j.contains("coeffs")) return banded_from_json(j);
    std::map<Integer, Integer> values;
    for (const auto& [key, value] : require(j, "coeffs", "chain").items()) {
      const std::string where = "chain/coeffs/" + key;
      values[parse_key_integer(key, where)] = as_integer(value, where);
    }
    if (values.empty()) return BandedZChain::constant(degree, 0);
    const Integer start = values.begin()->first;
    std::vector<Integer> window(static_cast<std::size_t>(values.rbegin()->first - start + 1), 0);
    for (const auto& [i, v] : values) window[static_cast<std::size_t>(i - start)] = v;
    return BandedZChain::finite(degree, start, std::move(window));
  }
  const auto& g = std::get<OrientedGraph>(host);
  if (j.contains("tail_left")) fail("chain", "banded chains need a banded_z graph");
  const Json& coeffs = require(j, "coeffs", "chain");
  if (!coeffs.is_object()) fail("chain/coeffs", "expected an object");
  if (degree == 0) {
    Chain0 c;
    for (const auto& [key, value] : coeffs.items()) {
      const std::string where = "chain/coeffs/" + key;
      c.add(VertexId{resolve_vertex(g, key, where)}, as_integer(value, where));
    }
    return c;
  }
  Chain1 c;
  for (const auto& [key, value] : coeffs.items()) {
    const std::string where = "chain/coeffs/" + key;
    c.add(EdgeId{resolve_edge(g, key, where)}, as_integer(value, where));
  }
  return c;
}

ChainValue parse_chain_text(const std::string& text, const GraphSpec& host, const std::string& origin) {
  try {
    return parse_chain(parse_text(text, origin), host);
  } catch (const InputError& e) {
    if (std::string(e.what()).rfind(origin, 0) == 0) throw;
    throw InputError(origin + ": " + e.what());
  }
}

ChainValue load_chain(const std::string& path, const GraphSpec& host) {
  return parse_chain_text(read_file(path), host, path);
}

Json chain_to_json(const Chain0& c, const OrientedGraph& g) {
  Json coeffs = Json::object();
  for (const auto& [v, x] : c.coeffs) coeffs[vertex_key(g, v)] = x;
  return Json{{"degree", 0}, {"coeffs", coeffs}};
}

Json chain_to_json(const Chain1& c, const OrientedGraph& g) {
  Json coeffs = Json::object();
  for (const auto& [e, x] : c.coeffs) coeffs[edge_key(g, e)] = x;
  return Json{{"degree", 1}, {"coeffs", coeffs}};
}

Json chain_to_json(const BandedZChain& c) {
  return Json{{"degree", c.degree},
              {"tail_left", c.tail_left},
              {"tail_right", c.tail_right},
              {"window_start", c.window_start},
              {"window_values", c.window_values}};
}

AlphaOverrides parse_alpha_overrides(const Json& j, const OrientedGraph& g) {
  AlphaOverrides out;
  const Json& list = require(j, "overrides", "alpha");
  if (!list.is_array()) fail("alpha/overrides", "expected an array");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "alpha/overrides/" + std::to_string(i);
    const VertexId x{resolve_vertex(g, key_text(require(list[i], "vertex", where), where + "/vertex"), where)};
    const Json& pairs = require(list[i], "pairs", where);
    if (!pairs.is_array()) fail(where + "/pairs", "expected an array");
    auto& dst = out[x];
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const std::string pw = where + "/pairs/" + std::to_string(k);
      if (!pairs[k].is_array() || pairs[k].size() != 2) fail(pw, "expected [incoming, outgoing]");
      dst.emplace_back(parse_slot(pairs[k][0], g, pw + "/0"), parse_slot(pairs[k][1], g, pw + "/1"));
    }
  }
  return out;
}

AlphaOverrides load_alpha_overrides(const std::string& path, const OrientedGraph& g) {
  try {
    return parse_alpha_overrides(parse_text(read_file(path), path), g);
  } catch (const InputError& e) {
    if (std::string(e.what()).rfind(path, 0) == 0) throw;
    throw InputError(path + ": " + e.what());
  }
}

Json basis_to_json(const Basis& b) {
  Json out = Json::array();
  for (const BlockIndex& x : b.elements()) out.push_back({x.vertex.value, x.slot.to_string()});
  return out;
}

BasisPtr basis_from_json(const Json& j) {
  if (!j.is_array()) fail("basis", "expected an array");
  std::vector<BlockIndex> el;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "basis/" + std::to_string(i);
    if (!j[i].is_array() || j[i].size() != 2 || !j[i][1].is_string()) fail(where, "expected [vertex, slot]");
    try {
      el.push_back(BlockIndex{VertexId{as_integer(j[i][0], where + "/0")}, SlotId::parse(j[i][1].get<std::string>())});
    } catch (const InputError& e) {
      fail(where, e.what());
    }
  }
  const std::size_t n = el.size();
  auto b = std::make_shared<const Basis>(std::move(el));
  if (b->size() != n) fail("basis", "duplicate basis vectors");
  return b;
}

Json operator_to_json(const SparseBlockOperator& a) {
  Json entries = Json::array();
  a.for_each([&](std::size_t r, std::size_t c, Integer v) { entries.push_back({r, c, v}); });
  return Json{{"basis", basis_to_json(*a.basis())}, {"entries", entries}};
}

SparseBlockOperator operator_from_json(const Json& j) {
  BasisPtr basis = basis_from_json(require(j, "basis", "operator"));
  const Json& es = require(j, "entries", "operator");
  if (!es.is_array()) fail("operator/entries", "expected an array");
  std::vector<std::tuple<std::size_t, std::size_t, Integer>> t;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string where = "operator/entries/" + std::to_string(i);
    if (!es[i].is_array() || es[i].size() != 3) fail(where, "expected [row, col, value]");
    const Integer r = as_integer(es[i][0], where + "/0");
    const Integer c = as_integer(es[i][1], where + "/1");
    if (r < 0 || c < 0 || static_cast<std::size_t>(r) >= basis->size() || static_cast<std::size_t>(c) >= basis->size())
      fail(where, "index outside the basis");
    t.emplace_back(static_cast<std::size_t>(r), static_cast<std::size_t>(c), as_integer(es[i][2], where + "/2"));
  }
  return SparseBlockOperator::from_indexed(std::move(basis), std::move(t));
}

}  // namespace coarsek
