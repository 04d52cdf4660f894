#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hrep/suites/report.hpp"

namespace hrep::suites {

struct Criterion {
  int id;
  std::string key;  // subcommand name
  std::string title;
  double limit_seconds;
  std::function<SuiteResult(std::uint64_t seed)> run;
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// The eleven acceptance criteria, in order.
const std::vector<Criterion>& criteria();
std::optional<Criterion> find_criterion(const std::string& key);

/// Runs one criterion, filling in timing, the time limit and the overall
/// status (every check passes and the run stays within its limit).
SuiteResult run_criterion(const Criterion& c, std::uint64_t seed);

}  // namespace hrep::suites
