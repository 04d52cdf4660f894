#include "hrep/jet.hpp"

#include <cstdlib>
#include <string>

namespace hrep {

int max_generators() {
  static const int cap = [] {
    const char* env = std::getenv("HOMOTOPY_REP_MAX_GENERATORS");
    if (env == nullptr || *env == '\0') return kHardMaxGenerators;
    try {
      const int v = std::stoi(env);
      return std::clamp(v, 1, kHardMaxGenerators);
    } catch (const std::exception&) {
      return kHardMaxGenerators;
    }
  }();
  return cap;
}

}  // namespace hrep
