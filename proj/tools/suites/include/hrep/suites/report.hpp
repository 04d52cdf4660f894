#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hrep/graded.hpp"

namespace hrep::suites {

struct Check {
  std::string name;
  bool pass = true;
  std::size_t comparisons = 0;
  std::string detail;  // first failure, or a short summary
  double seconds = 0;  // human-readable output only
};

/// Counts exact comparisons and keeps the first failure.
class Tally {
 public:
  explicit Tally(std::string name) { check_.name = std::move(name); }
  bool expect(bool ok, const std::string& what);
  /// Records an exception as a failure.
  void fail(const std::string& what);
  void note(std::string detail);
  Check done() &&;

 private:
  Check check_;
  std::string note_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Runs `body(tally)`; an exception becomes the check's failure.
template <typename Body>
Check guarded(const std::string& name, Body&& body) {
  Tally t(name);
  try {
    body(t);
  } catch (const std::exception& e) {
    t.fail(std::string("exception: ") + e.what());
  }
  return std::move(t).done();
}

struct SuiteResult {
  int id = 0;
  std::string key;
  std::string title;
  bool pass = true;
  std::vector<Check> checks;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();  // tables specific to the suite
  double seconds = 0;
  double limit_seconds = 0;
  bool within_limit = true;
};

/// Deterministic: timings are left out.
nlohmann::ordered_json to_json(const Check& c);
nlohmann::ordered_json to_json(const SuiteResult& r);
/// [{"degree", "ker", "im", "H"}, ..]
nlohmann::ordered_json cohomology_table(const CohomologyReport& r);
/// One line: status, id, key, timing, first failing check.
std::string summary_line(const SuiteResult& r);

}  // namespace hrep::suites
