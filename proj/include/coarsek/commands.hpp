#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "coarsek/io.hpp"
#include "coarsek/operator.hpp"
#include "coarsek/report.hpp"

namespace coarsek {

struct CommandOptions {
  Integer window = 16;  // interior [-N, N]
  Integer margin = 4;
  bool dump = false;
  std::uint64_t seed = 1;
};

Window window_of(const CommandOptions& o);

/// Homology descriptors; banded graphs must be the Cayley line or the edgeless line.
Report homology_report(const GraphSpec& g, const CommandOptions& o = {});

/// The degree-0 construction for a 0-chain, or for c = d(gamma) given a 1-chain.
Report phi0_report(const GraphSpec& g, const ChainValue& chain, const CommandOptions& o = {});

/// The degree-1 construction. Throws NotACycleError (finite) or PreconditionError
/// naming the vertex (banded) when the chain is not a cycle.
Report phi1_report(const GraphSpec& g, const ChainValue& chain, const AlphaOverrides* overrides = nullptr,
                   const CommandOptions& o = {});

/// Built-in scenarios: "example_5_1", "example_5_2", "random".
Report scenario_report(const std::string& name, const CommandOptions& o = {});
const std::vector<std::string>& scenario_names();

}  // namespace coarsek
