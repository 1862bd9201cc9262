#include "parbb/parallel.hpp"

#include <cstdlib>
#include <string>

namespace parbb {

std::size_t default_worker_count() {
  if (const char* env = std::getenv("PARBB_WORKERS")) {
    try {
      const long value = std::stol(env);
      if (value >= 1) return static_cast<std::size_t>(value);
    } catch (...) {
      // fall through to hardware concurrency
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace parbb
