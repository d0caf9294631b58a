#pragma once

#include <span>
#include <vector>

#include "kuniv/word.hpp"

namespace kuniv {

// All arrays are 1-based; index 0 is a placeholder unless documented.

// delta1[l] = number of distinct letters in w[1:l]; delta1[0] = 0.
struct PrefixDistinct {
  std::vector<int> delta1;
};
PrefixDistinct prefix_distinct(std::span<const Letter> w, int sigma);
PrefixDistinct prefix_distinct(const Word& w);

// delta[i] = number of distinct letters in w[i-sigma+1 : i], defined for
// i in [sigma : n]; entries below sigma are 0.
struct WindowDistinct {
  std::vector<int> delta;
};
WindowDistinct window_distinct(std::span<const Letter> w, int sigma);
WindowDistinct window_distinct(const Word& w);

// last-occurrence and d tables sampled at positions p = j*sigma + 1 for
// j = 0..(n-1)/sigma. last(j,a) is the last position of a in w[1:p]
// (n+1 when absent); d(j,a) = number of distinct letters in w[last(j,a):p]
// (0 when absent).
class SampledLastD {
 public:
  SampledLastD(int sigma, int samples) : sigma_(sigma), last_(static_cast<std::size_t>(sigma) * samples), d_(last_.size()), samples_(samples) {}

  int samples() const { return samples_; }
  int last(int j, Letter a) const { return last_[idx(j, a)]; }
  int d(int j, Letter a) const { return d_[idx(j, a)]; }

  int& last_ref(int j, Letter a) { return last_[idx(j, a)]; }
  int& d_ref(int j, Letter a) { return d_[idx(j, a)]; }

 private:
  std::size_t idx(int j, Letter a) const {
    return static_cast<std::size_t>(j) * sigma_ + static_cast<std::size_t>(a) - 1;
  }
  int sigma_;
  std::vector<int> last_;
  std::vector<int> d_;
  int samples_;
};
SampledLastD sampled_last_d(std::span<const Letter> w, int sigma);
SampledLastD sampled_last_d(const Word& w);

// Tables feeding the deletion recurrences.
struct DeletionTables {
  std::vector<int> univ;  // univ[i] = max j with w[j:i] universal, else 0
  std::vector<int> freq;  // freq[i] = occurrences of w[i] in w[1:i]
  std::vector<int> t_min;  // t_min[i] = min letter count in w[i+1:n]; indices 0..n

  std::vector<int> v_set;  // distinct univ values, ascending (0 included when present)
  struct Group {
    int j, lo, hi;  // positions i in [lo:hi] have univ[i] = j
  };
  std::vector<Group> groups;  // ascending by lo; they partition [1:n]

  // last_at_arch[i] = last position of w[i] in w[1 : univ[i]-1]
  // (n+1 when absent; entries with univ[i] = 0 are n+1 and unused).
  std::vector<int> last_at_arch;
  // last_prev[i] = last position of w[i] in w[1 : i-1] (n+1 when absent).
  std::vector<int> last_prev;
};
DeletionTables deletion_tables(std::span<const Letter> w, int sigma);
DeletionTables deletion_tables(const Word& w);

}  // namespace kuniv
