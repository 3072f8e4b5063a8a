// coarsek: homology, the degree-0 and degree-1 constructions, and the
// built-in verification suite from the command line.
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 bad input.

#include <cstdlib>
#include <iostream>
#include <optional>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"

#include "coarsek/acceptance.hpp"
#include "coarsek/commands.hpp"
#include "coarsek/phi1.hpp"

namespace {

using namespace coarsek;

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("coarsek");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  const char* env = std::getenv("COARSEK_LOG");
  spdlog::set_level(env ? spdlog::level::from_str(env) : spdlog::level::warn);
}

struct Flags {
  std::string graph;
  std::string chain;
  std::string alpha;
  std::string scenario;
  bool json = false;
  CommandOptions options;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_flag("--json", f.json, "Machine-readable report on stdout");
  cmd->add_option("--window", f.options.window, "Window half-width N on the integer line")->capture_default_str();
  cmd->add_option("--margin", f.options.margin, "Extra vertices generated beyond the window")->capture_default_str();
  cmd->add_flag("--dump", f.options.dump, "Include operator dumps in the report");
  cmd->add_option("--seed", f.options.seed, "Seed for random scenarios")->capture_default_str();
}

int emit(const std::vector<Report>& reports, bool json, bool wrap) {
  bool ok = true;
  for (const Report& r : reports) ok = ok && r.passed();
  if (json) {
    if (wrap) {
      Json all = Json::array();
      for (const Report& r : reports) all.push_back(r.to_json());
      std::cout << Json{{"status", ok ? "pass" : "fail"}, {"reports", all}}.dump(2) << "\n";
    } else {
      std::cout << reports.front().to_json().dump(2) << "\n";
    }
  } else {
    for (const Report& r : reports) std::cout << r.render_text();
  }
  return ok ? kPass : kCheckFailed;
}

int run_homology(const Flags& f) {
  const GraphSpec g = load_graph(f.graph);
  spdlog::info("loaded graph {}", f.graph);
  return emit({homology_report(g, f.options)}, f.json, false);
}

int run_phi0(const Flags& f) {
  const GraphSpec g = load_graph(f.graph);
  const ChainValue c = load_chain(f.chain, g);
  return emit({phi0_report(g, c, f.options)}, f.json, false);
}

int run_phi1(const Flags& f) {
  const GraphSpec g = load_graph(f.graph);
  const ChainValue c = load_chain(f.chain, g);
  std::optional<AlphaOverrides> overrides;
  if (!f.alpha.empty()) {
    const auto* finite = std::get_if<OrientedGraph>(&g);
    if (!finite) throw InputError("--alpha applies to finite graphs only");
    overrides = load_alpha_overrides(f.alpha, *finite);
  }
  return emit({phi1_report(g, c, overrides ? &*overrides : nullptr, f.options)}, f.json, false);
}

int run_verify(const Flags& f) {
  std::vector<Report> reports;
  if (!f.scenario.empty()) {
    reports.push_back(scenario_report(f.scenario, f.options));
    return emit(reports, f.json, true);
  }
  spdlog::info("running acceptance suite with seed {}", f.options.seed);
  const std::vector<CriterionResult> results = run_acceptance(f.options.seed);
  for (const CriterionResult& c : results) spdlog::info("criterion {} took {:.3f} s", c.number, c.seconds);
  reports.push_back(acceptance_report(results));
  for (const std::string& name : scenario_names()) reports.push_back(scenario_report(name, f.options));
  return emit(reports, f.json, true);
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Graph homology to Roe algebra K-theory, verified as exact matrix identities"};
  app.require_subcommand(1);
  Flags f;

  auto* homology = app.add_subcommand("homology", "H0 and H1 of a graph");
  homology->add_option("--graph", f.graph, "Graph JSON file")->required();
  add_common(homology, f);

  auto* phi0 = app.add_subcommand("phi0", "Projection pair of a 0-chain, with the boundary witness when c = d(gamma)");
  phi0->add_option("--graph", f.graph, "Graph JSON file")->required();
  phi0->add_option("--chain", f.chain, "Chain JSON file (a 1-chain means its boundary)")->required();
  add_common(phi0, f);

  auto* phi1 = app.add_subcommand("phi1", "Permutation unitary of a cycle");
  phi1->add_option("--graph", f.graph, "Graph JSON file")->required();
  phi1->add_option("--chain", f.chain, "Cycle JSON file")->required();
  phi1->add_option("--alpha", f.alpha, "Bijection overrides JSON file");
  add_common(phi1, f);

  auto* verify = app.add_subcommand("verify-paper", "Acceptance suite and built-in scenarios");
  verify->add_option("--scenario", f.scenario, "Run one scenario only")
      ->check(CLI::IsMember(scenario_names()));
  add_common(verify, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*homology) return run_homology(f);
    if (*phi0) return run_phi0(f);
    if (*phi1) return run_phi1(f);
    return run_verify(f);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kInputError;
}
