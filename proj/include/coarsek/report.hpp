#pragma once

#include <map>
#include <string>
#include <vector>

#include "coarsek/io.hpp"

namespace coarsek {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
  /// Vertex, edge or entry where a failed check went wrong.
  std::string locus;

  bool operator==(const Check&) const = default;
};

/// Ordered list of checks plus free-form certificates and optional operator dumps.
struct Report {
  std::string title;
  std::vector<Check> checks;
  Json certificates = Json::object();
  std::map<std::string, std::string> dumps;

  /// Adds a check; a name may appear only once per report.
  Check& add(std::string name, bool passed, std::string detail = {}, std::string locus = {});
  bool passed() const;
  const Check* find(const std::string& name) const;

  Json to_json() const;
  static Report from_json(const Json& j);
  std::string render_text() const;

  bool operator==(const Report&) const = default;
};

}  // namespace coarsek
