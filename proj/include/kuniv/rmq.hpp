#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace kuniv {

// Sparse-table range minimum index over a copy of the source array.
// query(i, j) returns the leftmost position of the minimum of A[i:j]
// (1-based, inclusive). O(n log n) build, O(1) query.
class RmqIndex {
 public:
  RmqIndex() = default;
  explicit RmqIndex(std::span<const std::int64_t> values) { rebuild(values); }

  // Rebuilds in place, reusing table storage across calls.
  void rebuild(std::span<const std::int64_t> values) {
    n_ = static_cast<int>(values.size());
    values_.assign(values.begin(), values.end());
    log2_.resize(static_cast<std::size_t>(n_) + 1);
    log2_[0] = 0;
    for (int i = 1; i <= n_; ++i) log2_[static_cast<std::size_t>(i)] = log2_[static_cast<std::size_t>(i) / 2] + 1;
    // log2_[len] = floor(log2(len)) + 1 levels; level k spans 2^k
    int levels = n_ >= 1 ? log2_[static_cast<std::size_t>(n_)] : 0;
    table_.resize(static_cast<std::size_t>(levels));
    if (levels == 0) return;
    auto& base = table_[0];
    base.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) base[static_cast<std::size_t>(i)] = i;
    for (int k = 1; k < levels; ++k) {
      int len = 1 << k;
      auto& cur = table_[static_cast<std::size_t>(k)];
      const auto& prev = table_[static_cast<std::size_t>(k) - 1];
      cur.resize(static_cast<std::size_t>(n_ - len + 1));
      for (int i = 0; i + len <= n_; ++i) {
        std::int32_t a = prev[static_cast<std::size_t>(i)];
        std::int32_t b = prev[static_cast<std::size_t>(i + len / 2)];
        cur[static_cast<std::size_t>(i)] = pick(a, b);
      }
    }
  }

  // 1-based inclusive range over the source array (positions 1..size()).
  int query(int i, int j) const {
    if (i > j) throw std::invalid_argument("rmq: empty range");
    if (i < 1 || j > n_) throw std::out_of_range("rmq: range out of bounds");
    int len = j - i + 1;
    int k = log2_[static_cast<std::size_t>(len)] - 1;
    std::int32_t a = table_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i - 1)];
    std::int32_t b = table_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j - (1 << k))];
    return pick(a, b) + 1;
  }

  std::int64_t value_at(int pos) const { return values_[static_cast<std::size_t>(pos) - 1]; }
  int size() const { return n_; }

 private:
  std::int32_t pick(std::int32_t a, std::int32_t b) const {
    // leftmost on ties
    if (values_[static_cast<std::size_t>(b)] < values_[static_cast<std::size_t>(a)]) return b;
    return a;
  }

  int n_ = 0;
  std::vector<std::int64_t> values_;
  std::vector<std::vector<std::int32_t>> table_;
  std::vector<int> log2_;
};

}  // namespace kuniv
