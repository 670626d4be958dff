#include "walshlab/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace walshlab {

namespace {

int env_override() {
  const char* raw = std::getenv("WALSHLAB_MAX_DEPTH");
  if (raw == nullptr || *raw == '\0') return 0;
  int value = 0;
  auto [ptr, ec] = std::from_chars(raw, raw + std::strlen(raw), value);
  if (ec != std::errc() || *ptr != '\0' || value <= 0 || value > 40) return 0;
  return value;
}

}  // namespace

int depth_cap(Backend backend) {
  if (int forced = env_override(); forced > 0) return forced;
  return backend == Backend::exact ? kExactDepthCap : kFloatDepthCap;
}

void require_depth(int depth, Backend backend, const std::string& what) {
  if (depth < 0) throw std::invalid_argument(what + ": negative depth");
  int cap = depth_cap(backend);
  if (depth > cap) {
    throw ResourceCapError(what + ": depth " + std::to_string(depth) + " exceeds the " +
                           (backend == Backend::exact ? "exact" : "float") + " cap of " +
                           std::to_string(cap));
  }
}

}  // namespace walshlab
