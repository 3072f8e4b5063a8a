// Python module _coarsek. Graphs, chains and reports cross the boundary as JSON text.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coarsek/acceptance.hpp"
#include "coarsek/commands.hpp"
#include "coarsek/io.hpp"
#include "coarsek/phi1.hpp"

namespace py = pybind11;
using namespace coarsek;

namespace {

CommandOptions options(Integer window, Integer margin, bool dump, std::uint64_t seed) {
  CommandOptions o;
  o.window = window;
  o.margin = margin;
  o.dump = dump;
  o.seed = seed;
  return o;
}

std::string phi1_json(const std::string& graph, const std::string& chain, const std::optional<std::string>& alpha,
                      Integer window, Integer margin, bool dump) {
  const GraphSpec g = parse_graph_text(graph);
  const ChainValue c = parse_chain_text(chain, g);
  std::optional<AlphaOverrides> overrides;
  if (alpha) {
    const auto* finite = std::get_if<OrientedGraph>(&g);
    if (!finite) throw InputError("alpha overrides apply to finite graphs only");
    overrides = parse_alpha_overrides(Json::parse(*alpha), *finite);
  }
  return phi1_report(g, c, overrides ? &*overrides : nullptr, options(window, margin, dump, 1)).to_json().dump();
}

}  // namespace

PYBIND11_MODULE(_coarsek, m) {
  m.doc() = "Exact integer checks of the graph homology to Roe algebra K-theory maps";

  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  auto precondition = py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<NotACycleError>(m, "NotACycleError", precondition.ptr());
  py::register_exception<OverflowError>(m, "OverflowError", PyExc_OverflowError);
  (void)input_error;

  m.def(
      "homology",
      [](const std::string& graph, Integer window, Integer margin) {
        return homology_report(parse_graph_text(graph), options(window, margin, false, 1)).to_json().dump();
      },
      py::arg("graph"), py::arg("window") = 16, py::arg("margin") = 4, "Homology report of a graph, as JSON text.");

  m.def(
      "phi0",
      [](const std::string& graph, const std::string& chain, Integer window, Integer margin, bool dump) {
        const GraphSpec g = parse_graph_text(graph);
        return phi0_report(g, parse_chain_text(chain, g), options(window, margin, dump, 1)).to_json().dump();
      },
      py::arg("graph"), py::arg("chain"), py::arg("window") = 16, py::arg("margin") = 4, py::arg("dump") = false,
      "Projection pair report of a 0-chain (or of the boundary of a 1-chain), as JSON text.");

  m.def("phi1", &phi1_json, py::arg("graph"), py::arg("chain"), py::arg("alpha") = std::nullopt,
        py::arg("window") = 16, py::arg("margin") = 4, py::arg("dump") = false,
        "Cycle unitary report, as JSON text. Raises NotACycleError on unbalanced chains.");

  m.def(
      "scenario",
      [](const std::string& name, Integer window, Integer margin, std::uint64_t seed) {
        return scenario_report(name, options(window, margin, false, seed)).to_json().dump();
      },
      py::arg("name"), py::arg("window") = 16, py::arg("margin") = 4, py::arg("seed") = 1);

  m.def("scenario_names", &scenario_names);

  m.def(
      "phi1_on_z", [](Integer k, Integer window, Integer margin) { return phi1_on_z(k, Window::centered(window, margin)); },
      py::arg("k"), py::arg("window") = 16, py::arg("margin") = 4,
      "Index of the cycle unitary of the constant chain k on the integer line.");

  m.def(
      "shift_index",
      [](Integer window, Integer margin) {
        const Window w = Window::centered(window, margin);
        return index_pairing(forward_shift(w), w);
      },
      py::arg("window") = 16, py::arg("margin") = 4, "Index of the forward shift on the integer line.");

  m.def(
      "run_acceptance",
      [](std::uint64_t seed) {
        py::list out;
        for (const CriterionResult& c : run_acceptance(seed)) {
          py::dict d;
          d["number"] = c.number;
          d["title"] = c.title;
          d["passed"] = c.passed;
          d["summary"] = c.summary;
          d["notes"] = c.notes;
          d["line"] = format_criterion(c);
          out.append(d);
        }
        return out;
      },
      py::arg("seed") = 1);
}
