#include "hypermorph/parallel.hpp"

#include <cstdlib>

namespace hypermorph {

unsigned configured_thread_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const char* env = std::getenv("HYPERMORPH_THREADS");
  if (env == nullptr || *env == '\0') return hw;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v <= 0) return hw;
  return static_cast<unsigned>(v);
}

}  // namespace hypermorph
