#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kuniv/infinity.hpp"
#include "kuniv/interval_union_find.hpp"

namespace kuniv {

// List A of up to 2*sigma values supporting, in O(sigma) total time for a
// round of sigma operations:
//   min()              rightmost position of the minimum and its value,
//   decrement_suffix(j) logically decrement A[j..m] by one,
//   append(x)          push one value (at most sigma appends per reset).
// Entries may be kInf; decrements leave infinite entries infinite. Values
// are never stored densely: an interval union-find keeps value differences
// between successive suffix minima.
class MinSuffixList {
 public:
  MinSuffixList() = default;

  void reset(std::span<const std::int64_t> values, std::span<const std::int32_t> sat_pos,
             std::span<const std::int32_t> sat_letter);

  struct MinResult {
    int pos;             // rightmost position attaining the minimum
    std::int64_t value;  // kInf when every live entry is infinite
    std::int32_t sat_pos;
    std::int32_t sat_letter;
  };

  MinResult min();
  void decrement_suffix(int j);  // throws std::out_of_range unless 1 <= j <= size()
  void append(std::int64_t value, std::int32_t sat_pos, std::int32_t sat_letter);

  int size() const { return m_; }
  long op_cost() const { return uf_.find_ops() + uf_.union_ops(); }

 private:
  struct Sat {
    bool inf = false;
    std::int64_t diff = 0;  // A[end] - A[start-1], with A[0] = 0
  };

  int sigma_ = 0;
  int m_ = 0;
  int appends_ = 0;
  bool tail_inf_ = false;   // the last interval is all-infinite
  std::int64_t last_val_ = 0;  // A[m] when finite
  std::int64_t fin_last_ = 0;  // value at the end of the last finite interval (valid when tail_inf_)

  IntervalUnionFind<Sat> uf_;
  std::vector<std::int32_t> sat_pos_, sat_letter_;
  std::vector<int> border_buf_;
  std::vector<Sat> sat_buf_;
};

}  // namespace kuniv
