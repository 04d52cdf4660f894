#pragma once

#include <cstdint>
#include <string>

#include "hrep/suites/report.hpp"
#include "hrep/suites/schema.hpp"

namespace hrep::suites {

/// Upper bounds on user-supplied sizes.
inline constexpr int kMaxDegree = 8;
inline constexpr int kMaxBound = 6;
inline constexpr int kMaxPoints = 100;

enum class Coefficients { kAdjoint, kTrivial };

/// H^0..H^max_degree of a Lie algebra with adjoint or trivial coefficients,
/// after checking d^2 = 0. Needs a point base.
SuiteResult cohomology_command(const AlgebroidModel& a, Coefficients coeff, int max_degree);

/// Psi(Ad_sigma) is a representation and equals ad_nabla componentwise,
/// symbolically and at `points` random chart points.
SuiteResult van_est_verify_command(const SmoothGroupoid& g, const EhresmannConn& sigma, int points,
                                   std::uint64_t seed);

/// Structure equations through `bound` and the cohomology of the normalized
/// total complex for degrees below the bound.
SuiteResult check_groupoid_rep_command(const FiniteGroupoid& g, const Json& rep, int bound);

}  // namespace hrep::suites
