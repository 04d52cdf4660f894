#include <iostream>

#include "hrep/models.hpp"
#include "hrep/rep_algebroid.hpp"

int main() {
  const hrep::CohomologyReport r = hrep::deformation_cohomology(hrep::models::sl2(), 0, 2);
  for (int d = 0; d <= 2; ++d)
    if (r.dim(d) != 0) return 1;
  std::cout << "sl2 is rigid\n";
  return 0;
}
