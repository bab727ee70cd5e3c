#include "tamari/report.hpp"

#include <chrono>
#include <iomanip>

namespace tamari {

bool Report::pass() const {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

void Report::add(std::string name, bool ok, std::string counterexample) {
  checks.push_back({std::move(name), ok, std::move(counterexample)});
}

nlohmann::json Report::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const Check& c : checks) {
    nlohmann::json j{{"name", c.name}, {"pass", c.pass}};
    if (!c.counterexample.empty()) j["counterexample"] = c.counterexample;
    cs.push_back(std::move(j));
  }
  return nlohmann::json{{"suite", suite},
                        {"params", params},
                        {"checks", cs},
                        {"wall_ms", wall_ms},
                        {"pass", pass()}};
}

void Report::print_text(std::ostream& os) const {
  for (const Check& c : checks) {
    os << (c.pass ? "  ok   " : "  FAIL ") << suite << ": " << c.name;
    if (!c.counterexample.empty()) os << "  [" << c.counterexample << "]";
    os << "\n";
  }
  os << (pass() ? "PASS " : "FAIL ") << suite << " (" << std::fixed << std::setprecision(1)
     << wall_ms << " ms, " << checks.size() << " checks)\n";
}

}  // namespace tamari
