#include "ideallab/limits.hpp"

#include <cstdlib>
#include <string>

namespace ideallab {

namespace {

template <typename T>
void overrideFromEnv(const char* name, T& value) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  try {
    std::size_t used = 0;
    unsigned long long parsed = std::stoull(raw, &used);
    if (used == std::string(raw).size() && parsed > 0) value = static_cast<T>(parsed);
  } catch (const std::exception&) {
    // malformed override: keep the default
  }
}

}  // namespace

const Limits& Limits::fromEnvironment() {
  static const Limits limits = [] {
    Limits l;
    overrideFromEnv("IDEAL_LAB_MAX_VARS", l.maxVars);
    overrideFromEnv("IDEAL_LAB_MAX_BOX", l.maxBox);
    return l;
  }();
  return limits;
}

}  // namespace ideallab
