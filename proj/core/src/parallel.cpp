#include "orbitcensus/parallel.hpp"

#include <cstdlib>
#include <string>

namespace orbitcensus {

auto default_worker_count() -> unsigned {
  if (const char* env = std::getenv("ORBIT_CENSUS_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    } catch (...) {
      // fall through to the hardware default
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace orbitcensus
