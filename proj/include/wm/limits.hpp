#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace wm {

/// Upper bound on the number of objects (group elements, vectors, subspaces)
/// any single enumeration may visit. WM_MAX_CELLS overrides the default.
inline std::uint64_t enumeration_cap() {
  constexpr std::uint64_t kDefault = 50'000'000;
  if (const char* env = std::getenv("WM_MAX_CELLS")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("WM_MAX_CELLS is not a number: ") + env);
    }
  }
  return kDefault;
}

/// Thrown when an enumeration would exceed enumeration_cap().
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_within_cap(std::uint64_t size, const std::string& what) {
  const auto cap = enumeration_cap();
  if (size > cap) {
    throw CapExceeded(what + ": size " + std::to_string(size) + " exceeds enumeration cap " + std::to_string(cap) +
                      " (set WM_MAX_CELLS to raise it)");
  }
}

}  // namespace wm
