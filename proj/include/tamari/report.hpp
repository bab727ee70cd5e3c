#pragma once

#include <chrono>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace tamari {

/// One named check inside a verification suite.  A failing check carries a
/// reproducible counterexample in canonical codec form.
struct Check {
  std::string name;
  bool pass = false;
  std::string counterexample;  // empty when passing
};

/// Machine-readable outcome of a verification suite.
struct Report {
  std::string suite;
  nlohmann::json params = nlohmann::json::object();
  std::vector<Check> checks;
  double wall_ms = 0.0;

  bool pass() const;
  void add(std::string name, bool ok, std::string counterexample = {});

  nlohmann::json to_json() const;
  /// One line per check plus a trailing summary line.
  void print_text(std::ostream& os) const;
};

/// Runs `fn`, filling wall_ms.
template <class F>
Report timed_report(std::string suite, nlohmann::json params, F&& fn) {
  Report r;
  r.suite = std::move(suite);
  r.params = std::move(params);
  auto t0 = std::chrono::steady_clock::now();
  fn(r);
  auto t1 = std::chrono::steady_clock::now();
  r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return r;
}

}  // namespace tamari
