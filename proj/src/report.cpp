#include "coarsek/report.hpp"

#include <algorithm>
#include <sstream>

namespace coarsek {

Check& Report::add(std::string name, bool passed, std::string detail, std::string locus) {
  if (find(name)) throw std::logic_error("report '" + title + "' already has a check named '" + name + "'");
  checks.push_back(Check{std::move(name), passed, std::move(detail), passed ? std::string{} : std::move(locus)});
  return checks.back();
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* Report::find(const std::string& name) const {
  for (const Check& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Json Report::to_json() const {
  Json cs = Json::array();
  for (const Check& c : checks) {
    Json j{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (!c.locus.empty()) j["locus"] = c.locus;
    cs.push_back(std::move(j));
  }
  Json out{{"title", title}, {"status", passed() ? "pass" : "fail"}, {"checks", cs}, {"certificates", certificates}};
  if (!dumps.empty()) out["dumps"] = dumps;
  return out;
}

Report Report::from_json(const Json& j) {
  Report r;
  try {
    r.title = j.at("title").get<std::string>();
    for (const Json& c : j.at("checks")) {
      const std::string status = c.at("status").get<std::string>();
      if (status != "pass" && status != "fail") throw InputError("report: bad status '" + status + "'");
      r.checks.push_back(Check{c.at("name").get<std::string>(), status == "pass", c.value("detail", std::string{}),
                               c.value("locus", std::string{})});
    }
    r.certificates = j.value("certificates", Json::object());
    if (j.contains("dumps")) r.dumps = j.at("dumps").get<std::map<std::string, std::string>>();
  } catch (const Json::exception& e) {
    throw InputError(std::string("report: ") + e.what());
  }
  return r;
}

std::string Report::render_text() const {
  std::ostringstream out;
  out << title << ": " << (passed() ? "PASS" : "FAIL") << "\n";
  for (const Check& c : checks) {
    out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) out << "  " << c.detail;
    out << "\n";
    if (!c.locus.empty()) out << "         at " << c.locus << "\n";
  }
  if (!certificates.empty()) {
    out << "  certificates:\n";
    for (const auto& [key, value] : certificates.items()) out << "    " << key << " = " << value.dump() << "\n";
  }
  for (const auto& [name, text] : dumps) out << "  dump " << name << ":\n" << text;
  return out.str();
}

}  // namespace coarsek
