#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "kuniv/distances.hpp"
#include "kuniv/word.hpp"

namespace kuniv::oracle {

// Deliberately simple reference implementations. They share no code with the
// fast algorithms and are the ground truth for the test suite.

struct ScaleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Spectrum {
  std::int64_t k = 0;
  std::set<std::vector<Letter>> words;
};

// Exact set of distinct length-k subsequences; guarded by sigma^k <= 1e6.
Spectrum spectrum(const Word& w, std::int64_t k);

// Spectrum-based and block-decomposition-based universality checks; both are
// computed and must agree.
bool is_k_universal(const Word& w, std::int64_t k);

// Breadth-first search over single-operation edit sequences, canonical
// renaming per frontier word. Guards: n <= 12, answer depth <= max_depth.
// Returns the exact minimum or throws ScaleError when the bound is hit.
std::int64_t bfs_distance(const Word& w, std::int64_t k, EditOp op, int max_depth = 6);

// Unoptimized O(n^2 k) dynamic programs straight from the recurrences.
std::int64_t naive_dp_distance(const Word& w, std::int64_t k, EditOp op);

// Explicit-array mirror of the min-suffix list.
class NaiveMinSuffixList {
 public:
  explicit NaiveMinSuffixList(std::vector<std::int64_t> values) : a_(std::move(values)) {}

  struct MinResult {
    int pos;
    std::int64_t value;
  };
  MinResult min() const;                 // rightmost position of the minimum
  void decrement_suffix(std::size_t j);  // 1-based
  void append(std::int64_t value);

  int size() const { return static_cast<int>(a_.size()); }

 private:
  std::vector<std::int64_t> a_;
};

// Exhaustive fast-vs-oracle sweep over every canonical word of length <=
// max_n using exactly sigma letters; returns the number of mismatches and
// reports them to `log` (may be null). BFS cross-checks run where the fast
// answer is at most bfs_limit.
struct SweepStats {
  long words = 0;
  long checks = 0;
  long bfs_checks = 0;
  long mismatches = 0;
};
SweepStats exhaustive_check(int max_n, int sigma, int bfs_limit, std::ostream* log);

}  // namespace kuniv::oracle
