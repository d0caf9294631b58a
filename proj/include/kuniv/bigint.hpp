#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kuniv {

// Arbitrary-precision unsigned integer with base-1e9 limbs (little-endian).
// Only the operations the distance computations need: add, subtract
// (non-negative results only), multiply by a machine word, compare, and
// decimal conversion.
class BigUint {
 public:
  BigUint() = default;
  explicit BigUint(std::uint64_t v);

  static BigUint from_string(std::string_view s);  // throws std::invalid_argument
  std::string to_string() const;

  bool is_zero() const { return limbs_.empty(); }
  bool fits_u64() const;
  std::uint64_t to_u64() const;  // throws std::overflow_error when too large

  BigUint& operator+=(const BigUint& o);
  BigUint& operator-=(const BigUint& o);  // requires *this >= o
  BigUint& operator*=(std::uint64_t f);

  friend BigUint operator+(BigUint a, const BigUint& b) { a += b; return a; }
  friend BigUint operator-(BigUint a, const BigUint& b) { a -= b; return a; }
  friend BigUint operator*(BigUint a, std::uint64_t f) { a *= f; return a; }

  int compare(const BigUint& o) const;  // -1, 0, 1

  friend bool operator==(const BigUint& a, const BigUint& b) { return a.compare(b) == 0; }
  friend bool operator!=(const BigUint& a, const BigUint& b) { return a.compare(b) != 0; }
  friend bool operator<(const BigUint& a, const BigUint& b) { return a.compare(b) < 0; }
  friend bool operator<=(const BigUint& a, const BigUint& b) { return a.compare(b) <= 0; }
  friend bool operator>(const BigUint& a, const BigUint& b) { return a.compare(b) > 0; }
  friend bool operator>=(const BigUint& a, const BigUint& b) { return a.compare(b) >= 0; }

 private:
  static constexpr std::uint32_t kBase = 1'000'000'000u;
  std::vector<std::uint32_t> limbs_;  // empty means zero
  void trim();
};

}  // namespace kuniv
