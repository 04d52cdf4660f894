#include "hrep/suites/report.hpp"

#include <cstdio>

namespace hrep::suites {

bool Tally::expect(bool ok, const std::string& what) {
  ++check_.comparisons;
  if (!ok && check_.pass) {
    check_.pass = false;
    check_.detail = what;
  }
  return ok;
}

void Tally::fail(const std::string& what) {
  if (check_.pass) check_.detail = what;
  check_.pass = false;
}

void Tally::note(std::string detail) { note_ = std::move(detail); }

Check Tally::done() && {
  if (check_.pass && check_.comparisons == 0) {
    check_.pass = false;
    check_.detail = "nothing was compared";
  }
  if (check_.pass) check_.detail = note_.empty() ? std::to_string(check_.comparisons) + " exact comparisons" : note_;
  check_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  return std::move(check_);
}

nlohmann::ordered_json to_json(const Check& c) {
  return {{"name", c.name}, {"pass", c.pass}, {"comparisons", c.comparisons}, {"detail", c.detail}};
}

nlohmann::ordered_json to_json(const SuiteResult& r) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  nlohmann::ordered_json out = {{"id", r.id}, {"key", r.key}, {"title", r.title}, {"pass", r.pass},
                                {"checks", checks}};
  if (!r.data.empty()) out["data"] = r.data;
  return out;
}

nlohmann::ordered_json cohomology_table(const CohomologyReport& r) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& e : r.entries) out.push_back({{"degree", e.degree}, {"ker", e.ker}, {"im", e.im}, {"H", e.H}});
  return out;
}

std::string summary_line(const SuiteResult& r) {
  std::size_t passed = 0;
  const Check* first_bad = nullptr;
  for (const auto& c : r.checks) {
    if (c.pass) ++passed;
    else if (!first_bad) first_bad = &c;
  }
  char head[160];
  if (r.id > 0)
    std::snprintf(head, sizeof head, "[%s] %2d %-24s %zu/%zu checks  %.2fs (limit %.0fs)", r.pass ? "PASS" : "FAIL",
                  r.id, r.key.c_str(), passed, r.checks.size(), r.seconds, r.limit_seconds);
  else
    std::snprintf(head, sizeof head, "[%s] %s  %zu/%zu checks", r.pass ? "PASS" : "FAIL", r.key.c_str(), passed,
                  r.checks.size());
  std::string line = head;
  if (first_bad) line += "  first failure: " + first_bad->name + ": " + first_bad->detail;
  else if (!r.within_limit) line += "  over the time limit";
  return line;
}

}  // namespace hrep::suites
