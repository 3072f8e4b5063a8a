#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coarsek/report.hpp"

namespace coarsek {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool passed = false;
  std::string summary;
  std::vector<std::string> notes;
  double seconds = 0;
};

/// Runs the ten acceptance criteria; deterministic given the seed (timings aside).
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

/// One line per criterion: "criterion N [PRIMARY] PASS|FAIL title: summary".
std::string format_criterion(const CriterionResult& c);

/// Criteria as report checks, without timings.
Report acceptance_report(const std::vector<CriterionResult>& results);

}  // namespace coarsek
