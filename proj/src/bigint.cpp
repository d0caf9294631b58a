#include "kuniv/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace kuniv {

BigUint::BigUint(std::uint64_t v) {
  while (v != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
    v /= kBase;
  }
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("not a decimal number");
  }
  // strip leading zeros
  std::size_t start = 0;
  while (start + 1 < s.size() && s[start] == '0') ++start;
  s = s.substr(start);
  BigUint r;
  for (std::size_t end = s.size(); end > 0;) {
    std::size_t begin = end >= 9 ? end - 9 : 0;
    std::uint32_t limb = 0;
    for (std::size_t i = begin; i < end; ++i) limb = limb * 10 + static_cast<std::uint32_t>(s[i] - '0');
    r.limbs_.push_back(limb);
    end = begin;
  }
  r.trim();
  return r;
}

std::string BigUint::to_string() const {
  if (limbs_.empty()) return "0";
  std::string s = std::to_string(limbs_.back());
  char buf[16];
  for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
    std::snprintf(buf, sizeof(buf), "%09u", limbs_[i]);
    s += buf;
  }
  return s;
}

bool BigUint::fits_u64() const {
  if (limbs_.size() > 3) return false;
  if (limbs_.size() < 3) return true;
  // compare against 2^64-1 = 18'446744073'709551615
  if (limbs_[2] > 18u) return false;
  if (limbs_[2] < 18u) return true;
  if (limbs_[1] > 446744073u) return false;
  if (limbs_[1] < 446744073u) return true;
  return limbs_[0] <= 709551615u;
}

std::uint64_t BigUint::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("value exceeds 64 bits");
  std::uint64_t v = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
  return v;
}

BigUint& BigUint::operator+=(const BigUint& o) {
  limbs_.resize(std::max(limbs_.size(), o.limbs_.size()), 0);
  std::uint32_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t v = static_cast<std::uint64_t>(limbs_[i]) + carry +
                      (i < o.limbs_.size() ? o.limbs_[i] : 0);
    limbs_[i] = static_cast<std::uint32_t>(v % kBase);
    carry = static_cast<std::uint32_t>(v / kBase);
  }
  if (carry) limbs_.push_back(carry);
  return *this;
}

BigUint& BigUint::operator-=(const BigUint& o) {
  if (compare(o) < 0) throw std::underflow_error("negative BigUint difference");
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t v = static_cast<std::int64_t>(limbs_[i]) - borrow -
                     (i < o.limbs_.size() ? static_cast<std::int64_t>(o.limbs_[i]) : 0);
    if (v < 0) {
      v += kBase;
      borrow = 1;
    } else {
      borrow = 0;
    }
    limbs_[i] = static_cast<std::uint32_t>(v);
  }
  trim();
  return *this;
}

BigUint& BigUint::operator*=(std::uint64_t f) {
  if (f == 0 || limbs_.empty()) {
    limbs_.clear();
    return *this;
  }
  unsigned __int128 carry = 0;
  for (auto& limb : limbs_) {
    unsigned __int128 v = static_cast<unsigned __int128>(limb) * f + carry;
    limb = static_cast<std::uint32_t>(v % kBase);
    carry = v / kBase;
  }
  while (carry != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
    carry /= kBase;
  }
  return *this;
}

int BigUint::compare(const BigUint& o) const {
  if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size() ? -1 : 1;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace kuniv
