#pragma once

#include <cstdint>
#include <limits>

namespace kuniv {

// Sentinel for "no solution" DP entries. Compares greater than every finite
// value; use inf_add instead of + whenever an operand may be infinite.
inline constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

inline constexpr std::int64_t inf_add(std::int64_t a, std::int64_t b) {
  return (a == kInf || b == kInf) ? kInf : a + b;
}

}  // namespace kuniv
