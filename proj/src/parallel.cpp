#include "modcount/parallel.hpp"

#include <cstdlib>
#include <string>

namespace modcount {

unsigned default_thread_count() {
  if (const char* env = std::getenv("MODCOUNT_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace modcount
