#pragma once

#include <cstddef>

#include "hrep/algebroid.hpp"

namespace hrep::models {

/// Basis e, f, h with [e,f] = h, [h,e] = 2e, [h,f] = -2f.
AlgebroidModel sl2();
/// [e0,e1] = e2 and cyclic.
AlgebroidModel so3();
/// [e0,e1] = e2.
AlgebroidModel heisenberg();
AlgebroidModel abelian(std::size_t n);
/// sl2 acting linearly on R^2; rho(X)(v) = -Xv so that rho is bracket preserving.
AlgebroidModel sl2_on_plane();
/// aff(1) acting on R by rho(a) = x d/dx, rho(b) = d/dx.
AlgebroidModel affine_line();

}  // namespace hrep::models
