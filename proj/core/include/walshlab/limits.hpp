#pragma once

#include <stdexcept>
#include <string>

namespace walshlab {

enum class Backend { exact, floating };

inline constexpr int kFloatDepthCap = 24;
inline constexpr int kExactDepthCap = 16;

/// Raised when a computation would exceed a configured resource cap.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Depth cap for a backend. WALSHLAB_MAX_DEPTH, when set to a positive
/// integer, replaces both defaults.
int depth_cap(Backend backend);

/// Throws ResourceCapError when depth exceeds the cap for backend.
void require_depth(int depth, Backend backend, const std::string& what);

/// "auto" backend selection: exact iff depth <= 16.
inline Backend auto_backend(int depth) { return depth <= kExactDepthCap ? Backend::exact : Backend::floating; }

}  // namespace walshlab
