#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace kuniv {

// Union-find over an ordered partition of [1:n] into intervals. Borders are
// interval end positions; the trailing interval (when the last border is
// below n) carries the generic border n+1. unite(b) removes border b,
// merging its interval with the next one. Each interval carries a caller
// supplied satellite value, addressed by the interval's border.
template <typename Sat>
class IntervalUnionFind {
 public:
  IntervalUnionFind() = default;

  IntervalUnionFind(int n, std::span<const int> borders, std::span<const Sat> satellites) {
    reset(n, borders, satellites);
  }

  void reset(int n, std::span<const int> borders, std::span<const Sat> satellites) {
    n_ = n;
    parent_.assign(static_cast<std::size_t>(n) + 2, 0);
    lower_.assign(static_cast<std::size_t>(n) + 2, 0);
    sat_.assign(static_cast<std::size_t>(n) + 2, Sat{});
    is_border_.assign(static_cast<std::size_t>(n) + 2, 0);
    finds_ = unions_ = 0;

    int prev = 0;
    for (int b : borders) {
      if (b <= prev || b > n) throw std::invalid_argument("unsorted borders");
      prev = b;
      is_border_[static_cast<std::size_t>(b)] = 1;
    }
    std::size_t intervals = borders.size() + ((borders.empty() || borders.back() < n) ? 1 : 0);
    if (satellites.size() != intervals) throw std::invalid_argument("satellite count mismatch");

    for (int u = 1; u <= n + 1; ++u)
      parent_[static_cast<std::size_t>(u)] = (u == n + 1 || is_border_[static_cast<std::size_t>(u)]) ? u : u + 1;

    int lo = 1;
    std::size_t s = 0;
    for (int b : borders) {
      lower_[static_cast<std::size_t>(b)] = lo;
      sat_[static_cast<std::size_t>(b)] = satellites[s++];
      lo = b + 1;
    }
    if (s < intervals) {
      lower_[static_cast<std::size_t>(n) + 1] = lo;
      sat_[static_cast<std::size_t>(n) + 1] = satellites[s];
    }
  }

  struct Interval {
    int lo;
    int hi;      // clamped to n
    int border;  // interval id; n+1 for the trailing generic interval
  };

  Interval find(int u) {
    if (u < 1 || u > n_) throw std::out_of_range("find: position out of range");
    ++finds_;
    int r = root_of(u);
    return {lower_[static_cast<std::size_t>(r)], r <= n_ ? r : n_, r};
  }

  const Sat& satellite(int border) const { return sat_[static_cast<std::size_t>(border)]; }
  Sat& satellite(int border) { return sat_[static_cast<std::size_t>(border)]; }

  // Removes border b; the merged interval keeps the border of the next
  // interval and receives the supplied satellite.
  void unite(int b, Sat merged) {
    if (b < 1 || b > n_ || !is_border_[static_cast<std::size_t>(b)])
      throw std::invalid_argument("unite: not a border");
    ++unions_;
    int lo = lower_[static_cast<std::size_t>(b)];
    is_border_[static_cast<std::size_t>(b)] = 0;
    parent_[static_cast<std::size_t>(b)] = b + 1;
    int r = root_of(b + 1);
    lower_[static_cast<std::size_t>(r)] = lo;
    sat_[static_cast<std::size_t>(r)] = merged;
  }

  long find_ops() const { return finds_; }
  long union_ops() const { return unions_; }

 private:
  int root_of(int u) {
    int r = u;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(u)] != r) {
      int next = parent_[static_cast<std::size_t>(u)];
      parent_[static_cast<std::size_t>(u)] = r;
      u = next;
    }
    return r;
  }

  int n_ = 0;
  std::vector<int> parent_;
  std::vector<int> lower_;
  std::vector<Sat> sat_;
  std::vector<char> is_border_;
  long finds_ = 0, unions_ = 0;
};

}  // namespace kuniv
