#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hrep/suites/report.hpp"

namespace hrep::suites {

/// One itemized identity about R, R^, Psi^ on the pair charts of R, R^2
/// and the Heisenberg group, checked as exact polynomial identities on
/// seeded random normalized data.
struct LemmaItem {
  std::string name;   // e.g. "R2.f"
  std::string claim;  // one-line statement
  std::function<Check(std::uint64_t seed)> run;
};

const std::vector<LemmaItem>& lemma_items();

}  // namespace hrep::suites
