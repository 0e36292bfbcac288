#include "spectraljet/parallel.hpp"

#include <cstdlib>
#include <string>

namespace spectraljet {

int thread_count() {
  if (const char* env = std::getenv("SPECTRALJET_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace spectraljet
